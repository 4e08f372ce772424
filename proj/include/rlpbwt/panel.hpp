#pragma once

#include "rlpbwt/interval.hpp"

#include <cstddef>
#include <vector>

namespace rlpbwt {

using Haplotype = std::vector<symbol_t>;

/// The h x w haplotype matrix. Rows may repeat. In ragged mode rows may
/// have different lengths (including zero).
struct Panel {
    std::vector<Haplotype> rows;
    /// Alphabet size. 0 means "infer as max symbol + 1".
    symbol_t sigma = 0;
    bool ragged = false;

    std::size_t height() const noexcept { return rows.size(); }
};

struct PanelReport {
    std::size_t h = 0;
    /// Common row length (fixed mode) or maximum row length (ragged mode).
    std::size_t w = 0;
    symbol_t sigma = 0;
    bool sigma_inferred = false;
    bool ragged = false;
    std::vector<std::size_t> lengths;
};

/// Checks every Panel invariant. Throws validation_error naming the first
/// violation ("empty panel", "symbol out of range", "mixed lengths").
PanelReport validate_panel(const Panel& p);

/// Number of distinct rows.
std::size_t count_distinct_rows(const Panel& p);

} // namespace rlpbwt
