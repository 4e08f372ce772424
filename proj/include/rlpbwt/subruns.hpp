#pragma once

#include "rlpbwt/interval.hpp"
#include "rlpbwt/pbwt.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rlpbwt {

/// An interval list produced by mapping another one, remembering which input
/// interval (1-based) each output interval is the image of. Terminator runs
/// that have no preimage carry source 0.
struct MappedList {
    IntervalList list;
    std::vector<std::uint32_t> source;
};

/// foreL over a raw column: images [fore[b], fore[e]] of the sub-runs in
/// `sub_runs`, sorted by left endpoint. Images are emitted symbol class by
/// symbol class, which is already left-endpoint order. Terminator sub-runs
/// have no image and are dropped. Throws validation_error if an interval
/// spans a run boundary or `sub_runs` does not partition the column.
MappedList fore_map_traced(std::span<const symbol_t> column, bool terminator_mode, const IntervalList& sub_runs);

/// backL onto a raw column (`column` is column j-1; `list` partitions
/// column j). In terminator mode the terminator runs of `column` are merged
/// in so the result still partitions it.
MappedList back_map_traced(std::span<const symbol_t> column, bool terminator_mode, const IntervalList& list);

/// foreL_j(L). Requires 1 <= j < w.
IntervalList fore_map(const PbwtColumns& pc, std::size_t j, const IntervalList& sub_runs);
/// backL_j(L). Requires 1 < j <= w.
IntervalList back_map(const PbwtColumns& pc, std::size_t j, const IntervalList& list);

/// SubIB_1 = intervals_1; SubIB_j = normalize(intervals_j, foreL_{j-1}(SubIB_{j-1})).
std::vector<IntervalList> build_subib(const PbwtColumns& pc);

/// SubIF_w = intervals_w; SubIF_j = backL_{j+1}(normalize(foreL_j(intervals_j), SubIF_{j+1})).
std::vector<IntervalList> build_subif(const PbwtColumns& pc);

struct SubRunLists {
    std::vector<IntervalList> subib;
    std::vector<IntervalList> subif;

    const IntervalList& ib(std::size_t j) const { return subib.at(j - 1); }
    const IntervalList& if_(std::size_t j) const { return subif.at(j - 1); }
    std::size_t total_ib() const noexcept;
    std::size_t total_if() const noexcept;
};

/// Both sub-run families. `with_back = false` leaves subib empty.
SubRunLists build_subruns(const PbwtColumns& pc, bool with_back = true);

} // namespace rlpbwt
