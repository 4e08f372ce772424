#pragma once

#include "rlpbwt/interval.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rlpbwt {

/// rank/select over a symbol array via per-symbol sorted position lists.
/// rank costs O(log n) (binary search), select O(log sigma_col) for the
/// symbol lookup plus O(1) indexing.
class SymbolRankSelect {
public:
    SymbolRankSelect() = default;
    explicit SymbolRankSelect(std::span<const symbol_t> values);

    std::uint32_t size() const noexcept { return n_; }
    /// Occurrences of c in values[1..x].
    std::uint32_t rank(symbol_t c, std::uint32_t x) const;
    /// Position of the k-th occurrence of c (k >= 1); size() + 1 if there are
    /// fewer than k occurrences.
    std::uint32_t select(symbol_t c, std::uint32_t k) const;

private:
    const std::vector<std::uint32_t>* positions_of(symbol_t c) const;

    std::vector<symbol_t> symbols_;
    std::vector<std::vector<std::uint32_t>> positions_;
    std::uint32_t n_ = 0;
};

} // namespace rlpbwt
