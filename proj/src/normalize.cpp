#include "rlpbwt/normalize.hpp"

#include <algorithm>

namespace rlpbwt {

Normalized normalize(const IntervalList& ip, const IntervalList& iq)
{
    if (!ip.is_partition() || !iq.is_partition())
        throw validation_error("normalize: inputs must be partitions");
    if (ip.n() != iq.n())
        throw validation_error("normalize: mismatched ranges [1," + std::to_string(ip.n()) + "] and [1," +
                               std::to_string(iq.n()) + "]");

    Normalized out;
    std::vector<Interval> pieces;
    pieces.reserve(ip.size() + iq.size() / 2);
    out.source.reserve(ip.size() + iq.size() / 2);

    if (iq.size() <= 3) {
        out.intervals = ip;
        for (std::uint32_t k = 1; k <= ip.size(); ++k)
            out.source.push_back(k);
        return out;
    }

    std::size_t q = 0;
    for (std::size_t k = 0; k < ip.size(); ++k) {
        const Interval cur = ip[k];
        row_t start = cur.b;
        while (iq[q].e < start)
            ++q;
        for (;;) {
            // iq[q] holds `start`; the piece [start, cur.e] overlaps
            // iq[q..] up to the interval holding cur.e.
            if (q + 3 >= iq.size() || iq[q + 3].b > cur.e) {
                pieces.push_back({start, cur.e});
                out.source.push_back(static_cast<std::uint32_t>(k + 1));
                break;
            }
            const row_t cut = iq[q + 2].e;
            pieces.push_back({start, cut});
            out.source.push_back(static_cast<std::uint32_t>(k + 1));
            start = cut + 1;
            q += 3;
        }
    }
    out.intervals = IntervalList(std::move(pieces), ip.n());
    return out;
}

std::size_t overlap_count(const Interval& iv, const IntervalList& iq)
{
    auto first = std::lower_bound(iq.begin(), iq.end(), iv.b,
                                  [](const Interval& x, row_t v) { return x.e < v; });
    auto last = std::upper_bound(first, iq.end(), iv.e,
                                 [](row_t v, const Interval& x) { return v < x.b; });
    return static_cast<std::size_t>(last - first);
}

} // namespace rlpbwt
