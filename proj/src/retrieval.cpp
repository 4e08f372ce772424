#include "rlpbwt/retrieval.hpp"

#include <algorithm>
#include <stdexcept>

namespace rlpbwt {

Predecessor::Predecessor(std::vector<row_t> sorted_values) : values_(std::move(sorted_values))
{
    if (!std::is_sorted(values_.begin(), values_.end()))
        throw validation_error("predecessor list must be sorted");
}

std::optional<PredecessorHit> Predecessor::query(row_t q) const
{
    auto it = std::upper_bound(values_.begin(), values_.end(), q);
    if (it == values_.begin())
        return std::nullopt;
    return PredecessorHit{*(it - 1), static_cast<std::size_t>(it - values_.begin())};
}

RetrievalIndex::RetrievalIndex(std::shared_ptr<const StepIndex> steps)
    : steps_(std::move(steps)), pred_(steps_->fore_column(1).starts)
{
}

Haplotype RetrievalIndex::extract(row_t i, ExtractCounters* counters) const
{
    const IndexDims& dims = steps_->dims();
    if (i < 1 || i > dims.h)
        throw std::out_of_range("extract: haplotype " + std::to_string(i) + " outside [1," + std::to_string(dims.h) +
                                "]");
    const auto hit = pred_.query(i);
    if (!hit)
        throw std::logic_error("extract: empty start list");

    ExtractCounters local;
    Haplotype out;
    out.reserve(dims.terminator_mode ? 0 : dims.w);
    row_t row = i;
    auto x = static_cast<std::uint32_t>(hit->position);
    for (std::size_t j = 1; j <= dims.w; ++j) {
        const symbol_t c = steps_->symbol_at_fore(j, x);
        ++local.symbol_reads;
        if (dims.terminator_mode) {
            if (c == kTerminator)
                break;
            out.push_back(c - 1);
        } else {
            out.push_back(c);
        }
        if (j < dims.w) {
            const StepResult next = steps_->fore_step(row, j, x);
            row = next.row;
            x = next.subrun;
            ++local.fore_steps;
        }
    }
    if (counters != nullptr)
        *counters = local;
    return out;
}

} // namespace rlpbwt
