#pragma once

#include "rlpbwt/interval.hpp"
#include "rlpbwt/panel.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace rlpbwt {

/// Internal code of the terminator '#' in terminator (ragged) mode. Real
/// symbols are shifted up by one so the terminator sorts first.
inline constexpr symbol_t kTerminator = 0;

/// PBWT and prefix-array columns of a panel, plus the run intervals of every
/// column. Columns are numbered 1..width(); rows 1..column_size(j).
struct PbwtColumns {
    std::size_t h = 0;
    /// Internal alphabet size (public sigma + 1 in terminator mode).
    symbol_t sigma = 0;
    bool terminator_mode = false;
    std::vector<std::vector<symbol_t>> pbwt;
    std::vector<std::vector<row_t>> pa;
    std::vector<IntervalList> runs;
    std::size_t r_tilde = 0;

    std::size_t width() const noexcept { return pbwt.size(); }
    std::size_t column_size(std::size_t j) const { return pbwt.at(j - 1).size(); }
    std::span<const symbol_t> column(std::size_t j) const { return pbwt.at(j - 1); }
    std::span<const row_t> pa_column(std::size_t j) const { return pa.at(j - 1); }
    symbol_t symbol(row_t i, std::size_t j) const { return pbwt.at(j - 1).at(i - 1); }
    row_t pa_at(row_t i, std::size_t j) const { return pa.at(j - 1).at(i - 1); }
    const IntervalList& runs_of(std::size_t j) const { return runs.at(j - 1); }
};

/// Maps a public symbol to its internal code.
constexpr symbol_t to_internal(symbol_t s, bool terminator_mode) noexcept
{
    return terminator_mode ? s + 1 : s;
}

/// Builds all columns with a stable per-column counting sort (Durbin's
/// construction). In ragged mode every row is extended with the terminator
/// and column j only lists rows with |S_i| + 1 >= j.
PbwtColumns build_pbwt(const Panel& p);

/// Maximal equal-symbol blocks of a column.
IntervalList extract_runs(std::span<const symbol_t> column);

/// fore[i][j] = C_c + rank_c(col_j, i), evaluated directly by scanning the
/// column. Throws std::out_of_range for j outside [1, w) or i outside the
/// column, and std::invalid_argument for a terminator row.
row_t naive_fore(const PbwtColumns& pc, row_t i, std::size_t j);

/// Inverse of naive_fore: position of col_j(PA)[i] within col_{j-1}(PA).
row_t naive_back(const PbwtColumns& pc, row_t i, std::size_t j);

/// fore values of every row of one column (index 0 = row 1). Terminator
/// rows map to 0.
std::vector<row_t> fore_table(std::span<const symbol_t> column, bool terminator_mode);

/// back values from column j+1 into column j, i.e. the inverse of
/// fore_table(column j). Index 0 = row 1 of column j+1.
std::vector<row_t> back_table(std::span<const symbol_t> column, bool terminator_mode);

} // namespace rlpbwt
