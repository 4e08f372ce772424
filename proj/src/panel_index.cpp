#include "rlpbwt/panel_index.hpp"

#include <stdexcept>

namespace rlpbwt {

PanelIndex::PanelIndex(symbol_t sigma, SymbolSyntax syntax, PrefixSearchIndex prefix)
    : sigma_(sigma), syntax_(syntax), prefix_(std::move(prefix)), retrieval_(prefix_.steps_ptr())
{
    if (prefix_.sorted()) {
        const auto inv = prefix_.perm_inv();
        perm_.assign(inv.size(), 0);
        for (std::size_t pos = 0; pos < inv.size(); ++pos) {
            if (inv[pos] < 1 || inv[pos] > inv.size() || perm_[inv[pos] - 1] != 0)
                throw validation_error("index permutation is not a bijection");
            perm_[inv[pos] - 1] = static_cast<row_t>(pos + 1);
        }
    }
}

PanelIndex PanelIndex::build(const Panel& p, const BuildOptions& opts)
{
    const PanelReport rep = validate_panel(p);
    std::vector<row_t> perm_inv;
    Panel reordered;
    const Panel* source = &p;
    if (opts.sorted) {
        perm_inv = lexicographic_order(p);
        reordered.sigma = p.sigma;
        reordered.ragged = p.ragged;
        reordered.rows.reserve(p.rows.size());
        for (row_t id : perm_inv)
            reordered.rows.push_back(p.rows[id - 1]);
        source = &reordered;
    }
    const PbwtColumns pc = build_pbwt(*source);
    const SubRunLists sr = build_subruns(pc, opts.with_back);
    auto steps = std::make_shared<const StepIndex>(build_step_index(pc, sr, opts.exec));
    auto prefix = PrefixSearchIndex::build(pc, sr, std::move(steps), opts.sorted, std::move(perm_inv));
    return PanelIndex(rep.sigma, opts.syntax, std::move(prefix));
}

row_t PanelIndex::original_id(row_t row) const
{
    return sorted() ? prefix_.perm_inv()[row - 1] : row;
}

row_t PanelIndex::row_of(row_t id) const
{
    if (id < 1 || id > height())
        throw std::out_of_range("haplotype id " + std::to_string(id) + " outside [1," + std::to_string(height()) + "]");
    return sorted() ? perm_[id - 1] : id;
}

PrefixResult PanelIndex::prefix_search(std::span<const symbol_t> pattern) const
{
    PrefixResult r = prefix_.search(pattern);
    r.index = original_id(r.index);
    return r;
}

SortedPrefixResult PanelIndex::prefix_search_sorted(std::span<const symbol_t> pattern) const
{
    return rlpbwt::prefix_search_sorted(prefix_, pattern);
}

Enumeration PanelIndex::enumerate(std::span<const symbol_t> pattern) const
{
    return enumerate_prefixed(prefix_, pattern);
}

Haplotype PanelIndex::extract(row_t id, ExtractCounters* counters) const
{
    return retrieval_.extract(row_of(id), counters);
}

} // namespace rlpbwt
