#pragma once

#include "rlpbwt/panel.hpp"
#include "rlpbwt/pbwt.hpp"
#include "rlpbwt/step_index.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace rlpbwt {

/// Number of i < h with S_i != S_{i+1}, in the given row order.
std::size_t compute_h_pp(const Panel& p);

/// Maximal blocks of column j whose rows (under PA_j) are identical in full.
IntervalList canonical_intervals(const PbwtColumns& pc, const Panel& p, std::size_t j);

struct BoundCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct BoundsReport {
    std::size_t h = 0;
    std::size_t w = 0;
    std::size_t h_pp = 0;
    /// h'' after sorting the rows lexicographically, for comparison.
    std::size_t h_pp_sorted = 0;
    std::vector<std::size_t> r_per_col;
    std::size_t r_tilde = 0;
    std::vector<std::size_t> ell_per_col;
    std::size_t distinct = 0;
    std::vector<BoundCheck> checks;

    bool all_pass() const noexcept;
};

/// Fills the pass/fail list from the other fields.
void check_bounds(BoundsReport& report);

/// Computes every quantity for a fixed-length panel and runs check_bounds.
/// Columns are processed in parallel unless `exec` is serial.
BoundsReport compute_bounds(const Panel& p, Execution exec = Execution::parallel);

/// One key=value per line.
std::string format_report(const BoundsReport& r);
/// column,r_j,ell_j rows with a header line.
std::string format_report_csv(const BoundsReport& r);

} // namespace rlpbwt
