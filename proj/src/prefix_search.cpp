#include "rlpbwt/prefix_search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace rlpbwt {

PrefixSearchIndex::PrefixSearchIndex(std::shared_ptr<const StepIndex> steps, std::vector<std::vector<row_t>> s_pa,
                                     std::vector<std::vector<row_t>> s_count, bool sorted,
                                     std::vector<row_t> perm_inv)
    : steps_(std::move(steps)),
      s_pa_(std::move(s_pa)),
      s_count_(std::move(s_count)),
      sorted_(sorted),
      perm_inv_(std::move(perm_inv))
{
    const std::size_t w = steps_->width();
    if (s_pa_.size() != w || s_count_.size() != w)
        throw validation_error("prefix index: column count mismatch");
    rank_select_.reserve(w);
    for (std::size_t j = 1; j <= w; ++j) {
        const auto& vals = steps_->fore_column(j).val_fore;
        if (s_pa_[j - 1].size() != vals.size() || s_count_[j - 1].size() != vals.size())
            throw validation_error("prefix index: array length mismatch in column " + std::to_string(j));
        rank_select_.emplace_back(vals);
    }
    if (sorted_ && perm_inv_.size() != steps_->dims().h)
        throw validation_error("prefix index: permutation length mismatch");
}

PrefixSearchIndex PrefixSearchIndex::build(const PbwtColumns& pc, const SubRunLists& sr,
                                           std::shared_ptr<const StepIndex> steps, bool sorted,
                                           std::vector<row_t> perm_inv)
{
    const std::size_t w = pc.width();
    std::vector<std::vector<row_t>> s_pa(w);
    std::vector<std::vector<row_t>> s_count(w);
    for (std::size_t j = 1; j <= w; ++j) {
        const auto col = pc.column(j);
        const IntervalList& subif = sr.if_(j);
        s_pa[j - 1].reserve(subif.size());
        s_count[j - 1].reserve(subif.size());
        std::unordered_map<symbol_t, row_t> seen;
        std::size_t next = 0;
        for (row_t i = 1; i <= col.size(); ++i) {
            const row_t count = ++seen[col[i - 1]];
            if (next < subif.size() && subif[next].b == i) {
                s_pa[j - 1].push_back(pc.pa_at(i, j));
                s_count[j - 1].push_back(count);
                ++next;
            }
        }
    }
    return PrefixSearchIndex(std::move(steps), std::move(s_pa), std::move(s_count), sorted, std::move(perm_inv));
}

PrefixResult PrefixSearchIndex::search(std::span<const symbol_t> pattern, const PrefixObserver& observer) const
{
    const StepIndex& st = *steps_;
    const IndexDims& dims = st.dims();
    const std::size_t m = std::min(pattern.size(), dims.w);
    const PrefixResult empty_prefix{0, dims.h, 1};
    if (m == 0)
        return empty_prefix;

    auto subrun_end = [&](const ForeStepColumn& col, std::uint32_t x) -> row_t {
        return x < col.starts.size() ? col.starts[x] - 1 : col.n;
    };

    const ForeStepColumn& first = st.fore_column(1);
    row_t b = 1;
    row_t e = first.n;
    std::uint32_t x = 1;
    std::uint32_t x_end = static_cast<std::uint32_t>(first.starts.size());
    row_t index = s_pa_[0][0];
    std::size_t matched = 0;

    for (std::size_t j = 1; j <= m; ++j) {
        if (observer)
            observer(j, b, index);
        const std::uint64_t wide = static_cast<std::uint64_t>(pattern[j - 1]) + (dims.terminator_mode ? 1 : 0);
        if (wide >= dims.sigma)
            break;
        const auto c = static_cast<symbol_t>(wide);
        const ForeStepColumn& col = st.fore_column(j);
        const auto rho = static_cast<std::uint32_t>(col.starts.size());

        // First occurrence of c in [b, e].
        row_t b_hit = b;
        std::uint32_t x_hit = x;
        if (col.val_fore[x - 1] != c) {
            const std::uint32_t before = rank_sym(j, c, x);
            x_hit = select_sym(j, c, before + 1);
            if (x_hit == rho + 1)
                break;
            b_hit = col.starts[x_hit - 1];
        }
        // Last occurrence of c in [b, e].
        row_t e_hit = e;
        std::uint32_t x_end_hit = x_end;
        if (col.val_fore[x_end - 1] != c) {
            const std::uint32_t upto = rank_sym(j, c, x_end);
            if (upto == 0)
                break;
            x_end_hit = select_sym(j, c, upto);
            e_hit = subrun_end(col, x_end_hit);
        }
        // c occurs in the column but not inside [b, e].
        if (b_hit > e_hit)
            break;
        if (b_hit != b)
            index = s_pa_[j - 1][x_hit - 1];
        matched = j;

        if (j < m) {
            const StepResult lo = st.fore_step(b_hit, j, x_hit);
            const StepResult hi = st.fore_step(e_hit, j, x_end_hit);
            b = lo.row;
            x = lo.subrun;
            e = hi.row;
            x_end = hi.subrun;
        } else {
            b = b_hit;
            x = x_hit;
            e = e_hit;
            x_end = x_end_hit;
        }
    }

    if (matched == 0)
        return empty_prefix;
    if (matched < m)
        return {matched, static_cast<std::size_t>(e - b + 1), index};

    const ForeStepColumn& last = st.fore_column(m);
    const auto& counts = s_count_[m - 1];
    const std::size_t count_lo = counts[x - 1] + (b - last.starts[x - 1]);
    const std::size_t count_hi = counts[x_end - 1] + (e - last.starts[x_end - 1]);
    return {matched, count_hi - count_lo + 1, index};
}

std::vector<row_t> lexicographic_order(const Panel& p)
{
    std::vector<row_t> order(p.rows.size());
    std::iota(order.begin(), order.end(), row_t{1});
    std::stable_sort(order.begin(), order.end(),
                     [&](row_t a, row_t b) { return p.rows[a - 1] < p.rows[b - 1]; });
    return order;
}

PrefixSearchIndex build_prefix_index(const Panel& p, bool sorted)
{
    validate_panel(p);
    std::vector<row_t> perm_inv;
    const Panel* source = &p;
    Panel reordered;
    if (sorted) {
        perm_inv = lexicographic_order(p);
        reordered.sigma = p.sigma;
        reordered.ragged = p.ragged;
        reordered.rows.reserve(p.rows.size());
        for (row_t id : perm_inv)
            reordered.rows.push_back(p.rows[id - 1]);
        source = &reordered;
    }
    const PbwtColumns pc = build_pbwt(*source);
    const SubRunLists sr = build_subruns(pc, false);
    auto steps = std::make_shared<const StepIndex>(build_step_index(pc, sr));
    return PrefixSearchIndex::build(pc, sr, std::move(steps), sorted, std::move(perm_inv));
}

PrefixResult partial_prefix_search(const PrefixSearchIndex& ix, std::span<const symbol_t> pattern)
{
    return ix.search(pattern);
}

SortedPrefixResult prefix_search_sorted(const PrefixSearchIndex& ix, std::span<const symbol_t> pattern)
{
    if (!ix.sorted())
        throw std::logic_error("prefix_search_sorted requires an index built over sorted haplotypes");
    const PrefixResult r = ix.search(pattern);
    return {r.matched, r.index, static_cast<row_t>(r.index + r.occ - 1)};
}

Enumeration enumerate_prefixed(const PrefixSearchIndex& ix, std::span<const symbol_t> pattern)
{
    const SortedPrefixResult r = prefix_search_sorted(ix, pattern);
    Enumeration out;
    out.matched = r.matched;
    out.ids.reserve(r.last - r.first + 1);
    for (row_t pos = r.first; pos <= r.last; ++pos)
        out.ids.push_back(ix.perm_inv()[pos - 1]);
    return out;
}

} // namespace rlpbwt
