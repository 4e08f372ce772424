#pragma once

#include "rlpbwt/panel.hpp"
#include "rlpbwt/prefix_search.hpp"
#include "rlpbwt/retrieval.hpp"
#include "rlpbwt/step_index.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rlpbwt {

/// How symbols are written in panel files and CLI patterns.
enum class SymbolSyntax : std::uint8_t { digits = 0, tokens = 1 };

struct BuildOptions {
    bool sorted = false;
    bool with_back = true;
    Execution exec = Execution::parallel;
    SymbolSyntax syntax = SymbolSyntax::digits;
};

/// Everything the CLI persists: stepping tables (fore, optionally back),
/// prefix-search arrays and the retrieval start list. Queries take and
/// return original haplotype ids even when the index was built sorted.
class PanelIndex {
public:
    PanelIndex() = default;
    PanelIndex(symbol_t sigma, SymbolSyntax syntax, PrefixSearchIndex prefix);

    static PanelIndex build(const Panel& p, const BuildOptions& opts = {});

    const StepIndex& steps() const noexcept { return prefix_.steps(); }
    const PrefixSearchIndex& prefix_index() const noexcept { return prefix_; }
    const RetrievalIndex& retrieval() const noexcept { return retrieval_; }

    /// Public alphabet size.
    symbol_t sigma() const noexcept { return sigma_; }
    SymbolSyntax syntax() const noexcept { return syntax_; }
    std::size_t height() const noexcept { return steps().dims().h; }
    std::size_t width() const noexcept { return steps().dims().w; }
    bool sorted() const noexcept { return prefix_.sorted(); }
    bool ragged() const noexcept { return steps().dims().terminator_mode; }
    bool has_back() const noexcept { return steps().has_back(); }

    /// Witness `index` is an original id (for sorted indexes: the id of the
    /// first sorted row in the matching range).
    PrefixResult prefix_search(std::span<const symbol_t> pattern) const;
    /// Matching rows in sorted positions. Requires sorted().
    SortedPrefixResult prefix_search_sorted(std::span<const symbol_t> pattern) const;
    /// Original ids prefixed by P[1..m']. Requires sorted().
    Enumeration enumerate(std::span<const symbol_t> pattern) const;
    /// Haplotype with original id `id`.
    Haplotype extract(row_t id, ExtractCounters* counters = nullptr) const;

    row_t original_id(row_t row) const;
    row_t row_of(row_t id) const;

private:
    symbol_t sigma_ = 0;
    SymbolSyntax syntax_ = SymbolSyntax::digits;
    PrefixSearchIndex prefix_;
    RetrievalIndex retrieval_;
    std::vector<row_t> perm_;
};

} // namespace rlpbwt
