#pragma once

#include "rlpbwt/panel.hpp"
#include "rlpbwt/step_index.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

namespace rlpbwt {

struct PredecessorHit {
    row_t value = 0;
    /// 1-based, rightmost among equal values.
    std::size_t position = 0;
    friend constexpr bool operator==(const PredecessorHit&, const PredecessorHit&) = default;
};

/// Predecessor search over a sorted list by binary search, O(log n).
class Predecessor {
public:
    Predecessor() = default;
    explicit Predecessor(std::vector<row_t> sorted_values);

    /// max{y <= q} and its rightmost position; nullopt below the minimum.
    std::optional<PredecessorHit> query(row_t q) const;
    const std::vector<row_t>& values() const noexcept { return values_; }

private:
    std::vector<row_t> values_;
};

inline std::optional<PredecessorHit> predecessor(const Predecessor& pred, row_t q)
{
    return pred.query(q);
}

/// Work done by one extraction.
struct ExtractCounters {
    std::size_t fore_steps = 0;
    std::size_t symbol_reads = 0;
};

/// Haplotype extraction from the fore tables: one predecessor search in
/// column 1 (where PA is the identity), then alternate symbol_at_fore and
/// fore_step across the columns.
class RetrievalIndex {
public:
    RetrievalIndex() = default;
    explicit RetrievalIndex(std::shared_ptr<const StepIndex> steps);

    /// S_i in public symbols. Ragged rows stop before the terminator.
    Haplotype extract(row_t i, ExtractCounters* counters = nullptr) const;

    const std::vector<row_t>& col1_starts() const noexcept { return pred_.values(); }
    std::size_t height() const noexcept { return steps_->dims().h; }
    std::size_t width() const noexcept { return steps_->dims().w; }

private:
    std::shared_ptr<const StepIndex> steps_;
    Predecessor pred_;
};

} // namespace rlpbwt
