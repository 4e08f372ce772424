#pragma once

#include "rlpbwt/panel.hpp"
#include "rlpbwt/prefix_search.hpp"
#include "rlpbwt/retrieval.hpp"
#include "rlpbwt/step_index.hpp"

#include <vector>

namespace rlpbwt {

/// Every row of the panel, in row order.
std::vector<Haplotype> extract_all(const RetrievalIndex& ix, Execution exec = Execution::parallel);

/// One search per pattern. Results are in pattern order regardless of `exec`.
std::vector<PrefixResult> prefix_search_batch(const PrefixSearchIndex& ix, const std::vector<Haplotype>& patterns,
                                              Execution exec = Execution::parallel);

/// fore[i][j] for every row i of columns 1..w-1 via the step tables.
/// Terminator rows have no image and stay 0.
std::vector<std::vector<row_t>> fore_step_all(const StepIndex& ix, Execution exec = Execution::parallel);

} // namespace rlpbwt
