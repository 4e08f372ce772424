#include "rlpbwt/step_index.hpp"

#include <exception>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rlpbwt {

namespace {

[[maybe_unused]] row_t subrun_end(const std::vector<row_t>& starts, row_t n, std::uint32_t x)
{
    return x < starts.size() ? starts[x] - 1 : n;
}

void check_subrun(const std::vector<row_t>& starts, row_t n, row_t i, std::uint32_t x, const char* what)
{
    if (x < 1 || x > starts.size())
        throw std::out_of_range(std::string(what) + ": sub-run index " + std::to_string(x) + " out of range");
#ifndef NDEBUG
    if (i < starts[x - 1] || i > subrun_end(starts, n, x))
        throw std::out_of_range(std::string(what) + ": row " + std::to_string(i) + " is not inside sub-run " +
                                std::to_string(x));
#else
    (void)i;
    (void)n;
#endif
}

} // namespace

BackStepColumn make_back_column(const IntervalList& cur, std::span<const symbol_t> column)
{
    BackStepColumn col;
    col.n = cur.n();
    col.val_back.reserve(cur.size());
    col.starts.reserve(cur.size());
    for (const Interval& iv : cur) {
        col.val_back.push_back(column[iv.b - 1]);
        col.starts.push_back(iv.b);
    }
    return col;
}

BackStepColumn make_back_column(const IntervalList& prev, const MappedList& mapped, const IntervalList& cur,
                                std::span<const symbol_t> column)
{
    BackStepColumn col = make_back_column(cur, column);
    col.tuples.resize(cur.size());
    const IntervalList& images = mapped.list;
    std::size_t m = 0;
    for (std::size_t tau = 0; tau < cur.size(); ++tau) {
        const Interval piece = cur[tau];
        while (m < images.size() && images[m].e < piece.b)
            ++m;
        for (std::size_t k = m; k < images.size() && images[k].b <= piece.e; ++k) {
            const std::uint32_t lambda = mapped.source[k];
            col.tuples[tau].push_back({images[k].b, images[k].e, prev.at(lambda).b, lambda});
        }
    }
    return col;
}

ForeStepColumn make_fore_column(std::span<const symbol_t> column, bool terminator_mode, const IntervalList& cur,
                                const IntervalList* next)
{
    ForeStepColumn col;
    col.n = cur.n();
    col.val_fore.reserve(cur.size());
    col.starts.reserve(cur.size());
    for (const Interval& iv : cur) {
        col.val_fore.push_back(column[iv.b - 1]);
        col.starts.push_back(iv.b);
    }
    if (next == nullptr)
        return col;

    const auto fore = fore_table(column, terminator_mode);
    col.tuples.resize(cur.size());
    for (std::size_t tau = 0; tau < cur.size(); ++tau) {
        const Interval piece = cur[tau];
        if (terminator_mode && column[piece.b - 1] == kTerminator)
            continue;
        const Interval image{fore[piece.b - 1], fore[piece.e - 1]};
        for (std::size_t k = next->find(image.b); k != 0 && k <= next->size() && next->at(k).b <= image.e; ++k) {
            const Interval target = next->at(k);
            col.tuples[tau].push_back(
                {piece.b, image.b, target.b, target.e, static_cast<std::uint32_t>(k)});
        }
    }
    return col;
}

StepIndex::StepIndex(IndexDims dims, std::vector<BackStepColumn> back, std::vector<ForeStepColumn> fore)
    : dims_(dims), back_(std::move(back)), fore_(std::move(fore))
{
}

StepResult StepIndex::back_step(row_t i, std::size_t j, std::uint32_t x) const
{
    if (!has_back())
        throw std::logic_error("back_step: index was built without the back side");
    if (j <= 1 || j > dims_.w)
        throw std::out_of_range("back_step: column " + std::to_string(j) + " outside (1," + std::to_string(dims_.w) +
                                "]");
    const BackStepColumn& col = back_[j - 1];
    check_subrun(col.starts, col.n, i, x, "back_step");
    for (const BackQuad& q : col.tuples[x - 1]) {
        if (q.s_tilde <= i && i <= q.t_tilde)
            return {i - q.s_tilde + q.s, q.lambda};
    }
    throw std::out_of_range("back_step: row " + std::to_string(i) + " not covered by sub-run " + std::to_string(x));
}

StepResult StepIndex::fore_step(row_t i, std::size_t j, std::uint32_t x) const
{
    if (j < 1 || j >= dims_.w)
        throw std::out_of_range("fore_step: column " + std::to_string(j) + " outside [1," + std::to_string(dims_.w) +
                                ")");
    const ForeStepColumn& col = fore_[j - 1];
    check_subrun(col.starts, col.n, i, x, "fore_step");
    for (const ForeQuint& q : col.tuples[x - 1]) {
        if (i < q.s_prime)
            break;
        const row_t target = i - q.s_prime + q.s_tilde;
        if (q.s <= target && target <= q.t)
            return {target, q.lambda};
    }
    throw std::out_of_range("fore_step: row " + std::to_string(i) + " has no fore image from sub-run " +
                            std::to_string(x));
}

symbol_t StepIndex::symbol_at_back(std::size_t j, std::uint32_t x) const
{
    return back_.at(j - 1).val_back.at(x - 1);
}

symbol_t StepIndex::symbol_at_fore(std::size_t j, std::uint32_t x) const
{
    return fore_.at(j - 1).val_fore.at(x - 1);
}

std::uint32_t StepIndex::locate_fore(std::size_t j, row_t i) const
{
    const ForeStepColumn& col = fore_.at(j - 1);
    if (i < 1 || i > col.n)
        throw std::out_of_range("locate_fore: row outside column");
    auto it = std::upper_bound(col.starts.begin(), col.starts.end(), i);
    return static_cast<std::uint32_t>(it - col.starts.begin());
}

std::uint32_t StepIndex::locate_back(std::size_t j, row_t i) const
{
    const BackStepColumn& col = back_.at(j - 1);
    if (i < 1 || i > col.n)
        throw std::out_of_range("locate_back: row outside column");
    auto it = std::upper_bound(col.starts.begin(), col.starts.end(), i);
    return static_cast<std::uint32_t>(it - col.starts.begin());
}

std::size_t StepIndex::tuple_count() const noexcept
{
    std::size_t total = 0;
    for (const auto& col : back_)
        for (const auto& list : col.tuples)
            total += list.size();
    for (const auto& col : fore_)
        for (const auto& list : col.tuples)
            total += list.size();
    return total;
}

std::size_t StepIndex::word_count() const noexcept
{
    std::size_t words = 0;
    for (const auto& col : back_) {
        for (const auto& list : col.tuples)
            words += 4 * list.size();
        words += col.val_back.size() + col.starts.size();
    }
    for (const auto& col : fore_) {
        for (const auto& list : col.tuples)
            words += 5 * list.size();
        words += col.val_fore.size() + col.starts.size();
    }
    return words;
}

StepIndex build_step_index(const PbwtColumns& pc, const SubRunLists& sr, Execution exec)
{
    const std::size_t w = pc.width();
    const bool with_back = !sr.subib.empty();
    std::vector<BackStepColumn> back(with_back ? w : 0);
    std::vector<ForeStepColumn> fore(w);

    auto build_column = [&](std::size_t j) {
        if (with_back) {
            if (j == 1) {
                back[0] = make_back_column(sr.ib(1), pc.column(1));
            } else {
                const MappedList mapped = fore_map_traced(pc.column(j - 1), pc.terminator_mode, sr.ib(j - 1));
                back[j - 1] = make_back_column(sr.ib(j - 1), mapped, sr.ib(j), pc.column(j));
            }
        }
        fore[j - 1] = make_fore_column(pc.column(j), pc.terminator_mode, sr.if_(j), j < w ? &sr.if_(j + 1) : nullptr);
    };

    const long long cols = static_cast<long long>(w);
    if (exec == Execution::parallel) {
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
        for (long long j = 1; j <= cols; ++j) {
            try {
                build_column(static_cast<std::size_t>(j));
            } catch (...) {
#pragma omp critical(rlpbwt_step_index_failure)
                if (!failure)
                    failure = std::current_exception();
            }
        }
        if (failure)
            std::rethrow_exception(failure);
    } else {
        for (long long j = 1; j <= cols; ++j)
            build_column(static_cast<std::size_t>(j));
    }

    IndexDims dims{pc.h, w, pc.sigma, pc.r_tilde, pc.terminator_mode};
    return StepIndex(dims, std::move(back), std::move(fore));
}

} // namespace rlpbwt
