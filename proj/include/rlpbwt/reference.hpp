#pragma once

// Slow, definition-level implementations used as oracles by the tests, the
// acceptance suite and `selftest`. Nothing here shares code with the
// production kernels beyond the plain data types.

#include "rlpbwt/interval.hpp"
#include "rlpbwt/normalize.hpp"
#include "rlpbwt/panel.hpp"
#include "rlpbwt/pbwt.hpp"
#include "rlpbwt/prefix_search.hpp"

#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace rlpbwt::reference {

using Rng = std::mt19937_64;

/// PBWT/PA by comparison sort: column j orders the rows present in it by
/// (S[j-1], ..., S[1], id), terminator smallest.
PbwtColumns brute_pbwt(const Panel& p);

/// pos[j-1][id-1] = 1-based position of haplotype id in PA_j, 0 if absent.
std::vector<std::vector<row_t>> pa_positions(const PbwtColumns& pc);

/// Splits each I_p interval after every third I_q interval it overlaps, using
/// an explicit overlap list per interval.
Normalized brute_normalize(const IntervalList& ip, const IntervalList& iq);

std::size_t common_prefix(std::span<const symbol_t> row, std::span<const symbol_t> pattern);

/// Linear scan over all rows. Pattern is truncated to `max_len`.
PrefixResult oracle_prefix(const Panel& p, std::span<const symbol_t> pattern, std::size_t max_len);
/// Original ids prefixed by the longest matched prefix, ascending.
std::vector<row_t> oracle_prefixed_ids(const Panel& p, std::span<const symbol_t> pattern, std::size_t max_len);

/// Blocks of rows under `pa` whose full haplotypes compare equal.
IntervalList oracle_canonical(const Panel& p, std::span<const row_t> pa);

struct PanelShape {
    std::size_t max_h = 32;
    std::size_t max_w = 32;
    symbol_t max_sigma = 4;
    bool ragged = false;
};

Panel random_panel(Rng& rng, const PanelShape& shape);
/// Random partition of [1, n] with interval lengths biased towards short.
IntervalList random_partition(Rng& rng, row_t n);
/// Mix of row prefixes, mutated row prefixes and uniform strings, lengths
/// in [0, max_len].
std::vector<Haplotype> sample_patterns(Rng& rng, const Panel& p, std::size_t max_len, symbol_t sigma,
                                       std::size_t count);

/// Each check returns human-readable failure descriptions (empty = pass).
using Failures = std::vector<std::string>;

Failures check_normalize(const IntervalList& ip, const IntervalList& iq);
/// Columns, runs and r~ of build_pbwt against brute_pbwt.
Failures check_pbwt(const Panel& p);
/// Sub-run sizes below 2 r~, partitions, containment in runs.
Failures check_subruns(const Panel& p);
/// Every row of every column: single steps against naive_fore/naive_back,
/// then chains to the panel edges against PA positions.
Failures check_stepping(const Panel& p, std::size_t* steps_done = nullptr);
Failures check_bounds(const Panel& p);
/// Patterns against the scan oracle, with the witness invariant observed on
/// every iteration.
Failures check_prefix(const Panel& p, const std::vector<Haplotype>& patterns);
Failures check_sorted(const Panel& p, const std::vector<Haplotype>& patterns);
/// Row reproduction and exactly (columns - 1) fore steps per extraction.
Failures check_retrieval(const Panel& p);

struct SelftestReport {
    std::size_t panels = 0;
    std::size_t checks = 0;
    Failures failures;
    bool ok() const noexcept { return failures.empty(); }
};

/// Runs every check on `panels` random panels (fixed and ragged) derived
/// from `seed`. Progress lines and failures go to `log` when non-null.
SelftestReport run_selftest(std::uint64_t seed, std::size_t panels, std::ostream* log = nullptr);

std::string describe(const Panel& p);

} // namespace rlpbwt::reference
