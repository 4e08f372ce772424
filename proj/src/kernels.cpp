#include "rlpbwt/kernels.hpp"

#include <exception>

namespace rlpbwt {
namespace {

/// Runs body(k) for k in [0, n), rethrowing the first exception.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body&& body)
{
    if (exec == Execution::serial) {
        for (std::size_t k = 0; k < n; ++k)
            body(k);
        return;
    }
    std::exception_ptr failure;
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        try {
            body(static_cast<std::size_t>(k));
        } catch (...) {
#pragma omp critical(rlpbwt_kernel_error)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace

std::vector<Haplotype> extract_all(const RetrievalIndex& ix, Execution exec)
{
    std::vector<Haplotype> out(ix.height());
    for_each_index(out.size(), exec, [&](std::size_t k) { out[k] = ix.extract(static_cast<row_t>(k + 1)); });
    return out;
}

std::vector<PrefixResult> prefix_search_batch(const PrefixSearchIndex& ix, const std::vector<Haplotype>& patterns,
                                              Execution exec)
{
    std::vector<PrefixResult> out(patterns.size());
    for_each_index(out.size(), exec, [&](std::size_t k) { out[k] = ix.search(patterns[k]); });
    return out;
}

std::vector<std::vector<row_t>> fore_step_all(const StepIndex& ix, Execution exec)
{
    const std::size_t w = ix.width();
    std::vector<std::vector<row_t>> out(w > 0 ? w - 1 : 0);
    for_each_index(out.size(), exec, [&](std::size_t k) {
        const std::size_t j = k + 1;
        const auto& col = ix.fore_column(j);
        out[k].assign(col.n, 0);
        for (std::uint32_t x = 1; x <= col.starts.size(); ++x) {
            if (col.tuples[x - 1].empty())
                continue;
            const row_t end = x < col.starts.size() ? col.starts[x] - 1 : col.n;
            for (row_t i = col.starts[x - 1]; i <= end; ++i)
                out[k][i - 1] = ix.fore_step(i, j, x).row;
        }
    });
    return out;
}

} // namespace rlpbwt
