#include "rlpbwt/panel.hpp"

#include <algorithm>
#include <set>

namespace rlpbwt {

PanelReport validate_panel(const Panel& p)
{
    if (p.rows.empty())
        throw validation_error("empty panel");

    PanelReport rep;
    rep.h = p.rows.size();
    rep.ragged = p.ragged;
    rep.lengths.reserve(p.rows.size());

    symbol_t max_symbol = 0;
    for (std::size_t r = 0; r < p.rows.size(); ++r) {
        const auto& row = p.rows[r];
        rep.lengths.push_back(row.size());
        rep.w = std::max(rep.w, row.size());
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (p.sigma != 0 && row[c] >= p.sigma)
                throw validation_error("symbol out of range: row " + std::to_string(r + 1) + " column " +
                                       std::to_string(c + 1) + " has " + std::to_string(row[c]) +
                                       " with sigma=" + std::to_string(p.sigma));
            max_symbol = std::max(max_symbol, row[c]);
        }
    }

    if (!p.ragged) {
        for (std::size_t r = 0; r < p.rows.size(); ++r) {
            if (p.rows[r].size() != p.rows.front().size())
                throw validation_error("mixed lengths: row 1 has " + std::to_string(p.rows.front().size()) +
                                       " symbols, row " + std::to_string(r + 1) + " has " +
                                       std::to_string(p.rows[r].size()));
        }
        if (rep.w == 0)
            throw validation_error("empty panel: rows have no columns");
    }

    if (p.sigma == 0) {
        rep.sigma = max_symbol + 1;
        rep.sigma_inferred = true;
    } else {
        rep.sigma = p.sigma;
    }
    return rep;
}

std::size_t count_distinct_rows(const Panel& p)
{
    std::set<Haplotype> distinct(p.rows.begin(), p.rows.end());
    return distinct.size();
}

} // namespace rlpbwt
