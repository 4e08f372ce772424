#pragma once

#include "rlpbwt/panel.hpp"
#include "rlpbwt/pbwt.hpp"
#include "rlpbwt/rank_select.hpp"
#include "rlpbwt/step_index.hpp"
#include "rlpbwt/subruns.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace rlpbwt {

/// Longest common prefix length m', number of haplotypes prefixed by
/// P[1..m'], and the smallest such haplotype row.
struct PrefixResult {
    std::size_t matched = 0;
    std::size_t occ = 0;
    row_t index = 0;
    friend constexpr bool operator==(const PrefixResult&, const PrefixResult&) = default;
};

/// m' and the row range [first, last] of a lexicographically sorted panel.
struct SortedPrefixResult {
    std::size_t matched = 0;
    row_t first = 0;
    row_t last = 0;
    friend constexpr bool operator==(const SortedPrefixResult&, const SortedPrefixResult&) = default;
};

/// Hook called at the start of every search iteration with (j, b, index).
using PrefixObserver = std::function<void(std::size_t, row_t, row_t)>;

/// Fore-stepping tables plus, per column, the PA entry (sPA), the PBWT
/// symbol (sVal, shared with the step tables) and the running count of that
/// symbol (sCount) at every SubIF_j start, with rank/select over sVal.
class PrefixSearchIndex {
public:
    PrefixSearchIndex() = default;
    PrefixSearchIndex(std::shared_ptr<const StepIndex> steps, std::vector<std::vector<row_t>> s_pa,
                      std::vector<std::vector<row_t>> s_count, bool sorted, std::vector<row_t> perm_inv);

    /// Derives the auxiliary arrays from PBWT/PA columns and SubIF lists.
    static PrefixSearchIndex build(const PbwtColumns& pc, const SubRunLists& sr, std::shared_ptr<const StepIndex> steps,
                                   bool sorted, std::vector<row_t> perm_inv);

    /// Pattern symbols are public (un-shifted). Symbols outside the alphabet
    /// end the match at their column.
    PrefixResult search(std::span<const symbol_t> pattern, const PrefixObserver& observer = {}) const;

    const StepIndex& steps() const noexcept { return *steps_; }
    const std::shared_ptr<const StepIndex>& steps_ptr() const noexcept { return steps_; }
    bool sorted() const noexcept { return sorted_; }
    bool terminator_mode() const noexcept { return steps_->dims().terminator_mode; }
    std::size_t height() const noexcept { return steps_->dims().h; }
    std::size_t width() const noexcept { return steps_->dims().w; }

    std::span<const row_t> s_pa(std::size_t j) const { return s_pa_.at(j - 1); }
    std::span<const symbol_t> s_val(std::size_t j) const { return steps_->fore_column(j).val_fore; }
    std::span<const row_t> s_count(std::size_t j) const { return s_count_.at(j - 1); }
    /// pi^-1: original id of each sorted row. Empty unless built sorted.
    std::span<const row_t> perm_inv() const noexcept { return perm_inv_; }
    const std::vector<std::vector<row_t>>& s_pa_columns() const noexcept { return s_pa_; }
    const std::vector<std::vector<row_t>>& s_count_columns() const noexcept { return s_count_; }

    /// Internal-symbol rank/select over sVal_j.
    std::uint32_t rank_sym(std::size_t j, symbol_t c, std::uint32_t x) const { return rank_select_.at(j - 1).rank(c, x); }
    std::uint32_t select_sym(std::size_t j, symbol_t c, std::uint32_t k) const
    {
        return rank_select_.at(j - 1).select(c, k);
    }

private:
    std::shared_ptr<const StepIndex> steps_;
    std::vector<std::vector<row_t>> s_pa_;
    std::vector<std::vector<row_t>> s_count_;
    std::vector<SymbolRankSelect> rank_select_;
    bool sorted_ = false;
    std::vector<row_t> perm_inv_;
};

/// Stable lexicographic order of the rows: result[k] = original id (1-based)
/// of the k-th smallest row.
std::vector<row_t> lexicographic_order(const Panel& p);

/// Fore-only index over `p`. With `sorted`, rows are sorted first and pi^-1
/// kept for enumeration; reported rows then refer to sorted positions.
PrefixSearchIndex build_prefix_index(const Panel& p, bool sorted);

PrefixResult partial_prefix_search(const PrefixSearchIndex& ix, std::span<const symbol_t> pattern);

/// [gamma, gamma'] = [index, index + occ - 1]. Requires a sorted index.
SortedPrefixResult prefix_search_sorted(const PrefixSearchIndex& ix, std::span<const symbol_t> pattern);

struct Enumeration {
    std::size_t matched = 0;
    /// Original ids in sorted-position order.
    std::vector<row_t> ids;
};

/// All original ids prefixed by P[1..m']. Requires a sorted index.
Enumeration enumerate_prefixed(const PrefixSearchIndex& ix, std::span<const symbol_t> pattern);

} // namespace rlpbwt
