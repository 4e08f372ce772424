#pragma once

#include "rlpbwt/interval.hpp"

#include <cstdint>
#include <vector>

namespace rlpbwt {

/// Output of normalize(): the refined partition and, for every refined
/// interval, the 1-based index of the I_p interval it was cut from.
struct Normalized {
    IntervalList intervals;
    std::vector<std::uint32_t> source;
};

/// Splits the intervals of `ip` so that each piece overlaps at most three
/// intervals of `iq`. Scans `ip` left to right with a monotone cursor into
/// `iq`; an interval overlapping four or more `iq` intervals is cut at the
/// right endpoint of the third one and the remainder is processed again.
/// Produces at most |ip| + floor(|iq| / 2) pieces in O(|ip| + |iq|) time.
///
/// Throws validation_error if either list is not a partition or the two
/// ranges differ.
Normalized normalize(const IntervalList& ip, const IntervalList& iq);

/// Number of intervals of `iq` intersecting `iv`.
std::size_t overlap_count(const Interval& iv, const IntervalList& iq);

} // namespace rlpbwt
