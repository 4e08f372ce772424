#include "rlpbwt/rank_select.hpp"

#include <algorithm>

namespace rlpbwt {

SymbolRankSelect::SymbolRankSelect(std::span<const symbol_t> values) : n_(static_cast<std::uint32_t>(values.size()))
{
    symbols_.assign(values.begin(), values.end());
    std::sort(symbols_.begin(), symbols_.end());
    symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
    positions_.resize(symbols_.size());
    for (std::uint32_t x = 0; x < values.size(); ++x) {
        auto slot = std::lower_bound(symbols_.begin(), symbols_.end(), values[x]) - symbols_.begin();
        positions_[static_cast<std::size_t>(slot)].push_back(x + 1);
    }
}

const std::vector<std::uint32_t>* SymbolRankSelect::positions_of(symbol_t c) const
{
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), c);
    if (it == symbols_.end() || *it != c)
        return nullptr;
    return &positions_[static_cast<std::size_t>(it - symbols_.begin())];
}

std::uint32_t SymbolRankSelect::rank(symbol_t c, std::uint32_t x) const
{
    const auto* pos = positions_of(c);
    if (pos == nullptr)
        return 0;
    return static_cast<std::uint32_t>(std::upper_bound(pos->begin(), pos->end(), x) - pos->begin());
}

std::uint32_t SymbolRankSelect::select(symbol_t c, std::uint32_t k) const
{
    const auto* pos = positions_of(c);
    if (pos == nullptr || k == 0 || k > pos->size())
        return n_ + 1;
    return (*pos)[k - 1];
}

} // namespace rlpbwt
