#pragma once

#include "rlpbwt/interval.hpp"
#include "rlpbwt/pbwt.hpp"
#include "rlpbwt/subruns.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace rlpbwt {

/// (s~, t~, s, lambda): [s~, t~] is an interval of foreL_{j-1}(SubIB_{j-1})
/// overlapping the sub-run, s = back[s~][j], lambda its index in SubIB_{j-1}.
struct BackQuad {
    row_t s_tilde = 0;
    row_t t_tilde = 0;
    row_t s = 0;
    std::uint32_t lambda = 0;
    friend constexpr bool operator==(const BackQuad&, const BackQuad&) = default;
};

/// (s', s~, s, t, lambda): s' is the sub-run start, s~ = fore[s'][j], and
/// [s, t] = SubIF_{j+1}[lambda] overlaps the fore-image of the sub-run.
struct ForeQuint {
    row_t s_prime = 0;
    row_t s_tilde = 0;
    row_t s = 0;
    row_t t = 0;
    std::uint32_t lambda = 0;
    friend constexpr bool operator==(const ForeQuint&, const ForeQuint&) = default;
};

/// At most three tuples stored inline.
template <class Tuple>
class TupleList {
public:
    static constexpr std::size_t capacity = 3;

    void push_back(const Tuple& t)
    {
        if (size_ == capacity)
            throw std::length_error("tuple list holds at most three entries");
        items_[size_++] = t;
    }
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    const Tuple& operator[](std::size_t k) const noexcept { return items_[k]; }
    const Tuple* begin() const noexcept { return items_.data(); }
    const Tuple* end() const noexcept { return items_.data() + size_; }

    friend bool operator==(const TupleList& a, const TupleList& b)
    {
        return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
    }

private:
    std::array<Tuple, capacity> items_{};
    std::uint8_t size_ = 0;
};

using BackTuples = TupleList<BackQuad>;
using ForeTuples = TupleList<ForeQuint>;

/// Back-stepping tables of one column (tuples empty at column 1).
struct BackStepColumn {
    std::vector<BackTuples> tuples;
    std::vector<symbol_t> val_back;
    std::vector<row_t> starts;
    row_t n = 0;
    friend bool operator==(const BackStepColumn&, const BackStepColumn&) = default;
};

/// Fore-stepping tables of one column (tuples empty at column w, and for
/// terminator sub-runs).
struct ForeStepColumn {
    std::vector<ForeTuples> tuples;
    std::vector<symbol_t> val_fore;
    std::vector<row_t> starts;
    row_t n = 0;
    friend bool operator==(const ForeStepColumn&, const ForeStepColumn&) = default;
};

/// Result of one constant-time step: the row in the neighbouring column and
/// the (1-based) index of the sub-run holding it there.
struct StepResult {
    row_t row = 0;
    std::uint32_t subrun = 0;
    friend constexpr bool operator==(const StepResult&, const StepResult&) = default;
};

/// Builds B_j for one column pair. `prev` is SubIB_{j-1}, `mapped` is
/// foreL_{j-1}(SubIB_{j-1}) with sources, `cur` is SubIB_j and `column`
/// the PBWT column j.
BackStepColumn make_back_column(const IntervalList& prev, const MappedList& mapped, const IntervalList& cur,
                                std::span<const symbol_t> column);

/// Value and start arrays only (column 1).
BackStepColumn make_back_column(const IntervalList& cur, std::span<const symbol_t> column);

/// Builds F_j for one column pair. `next` is SubIF_{j+1}, or nullptr at the
/// last column.
ForeStepColumn make_fore_column(std::span<const symbol_t> column, bool terminator_mode, const IntervalList& cur,
                                const IntervalList* next);

enum class Execution { serial, parallel };

struct IndexDims {
    std::size_t h = 0;
    std::size_t w = 0;
    /// Internal alphabet size.
    symbol_t sigma = 0;
    std::size_t r_tilde = 0;
    bool terminator_mode = false;
    friend bool operator==(const IndexDims&, const IndexDims&) = default;
};

/// Constant-time fore/back stepping over sub-runs, answering queries from
/// the tuple tables alone.
class StepIndex {
public:
    StepIndex() = default;
    StepIndex(IndexDims dims, std::vector<BackStepColumn> back, std::vector<ForeStepColumn> fore);

    const IndexDims& dims() const noexcept { return dims_; }
    std::size_t width() const noexcept { return dims_.w; }
    bool has_back() const noexcept { return !back_.empty(); }

    /// (back[i][j], sub-run of SubIB_{j-1} holding it). Requires 1 < j <= w
    /// and i inside SubIB_j[x]; the latter is checked only in debug builds.
    StepResult back_step(row_t i, std::size_t j, std::uint32_t x) const;
    /// (fore[i][j], sub-run of SubIF_{j+1} holding it). Requires 1 <= j < w
    /// and i inside SubIF_j[x].
    StepResult fore_step(row_t i, std::size_t j, std::uint32_t x) const;

    symbol_t symbol_at_back(std::size_t j, std::uint32_t x) const;
    symbol_t symbol_at_fore(std::size_t j, std::uint32_t x) const;

    /// Sub-run of SubIF_j / SubIB_j holding row i, by binary search over the
    /// start list. Entry point for chains; not part of the O(1) step.
    std::uint32_t locate_fore(std::size_t j, row_t i) const;
    std::uint32_t locate_back(std::size_t j, row_t i) const;

    std::size_t subrun_count_fore(std::size_t j) const { return fore_.at(j - 1).starts.size(); }
    std::size_t subrun_count_back(std::size_t j) const { return back_.at(j - 1).starts.size(); }
    row_t column_size(std::size_t j) const { return fore_.at(j - 1).n; }

    const BackStepColumn& back_column(std::size_t j) const { return back_.at(j - 1); }
    const ForeStepColumn& fore_column(std::size_t j) const { return fore_.at(j - 1); }
    const std::vector<BackStepColumn>& back_columns() const noexcept { return back_; }
    const std::vector<ForeStepColumn>& fore_columns() const noexcept { return fore_; }

    /// Integers held by the query tables: tuple fields, value and start arrays.
    std::size_t word_count() const noexcept;
    std::size_t tuple_count() const noexcept;

    friend bool operator==(const StepIndex&, const StepIndex&) = default;

private:
    IndexDims dims_;
    std::vector<BackStepColumn> back_;
    std::vector<ForeStepColumn> fore_;
};

/// Tables for every column. Column pairs are independent once the sub-runs
/// exist, so the parallel variant distributes columns over OpenMP threads.
/// If `sr.subib` is empty only the fore side is built.
StepIndex build_step_index(const PbwtColumns& pc, const SubRunLists& sr, Execution exec = Execution::parallel);

} // namespace rlpbwt
