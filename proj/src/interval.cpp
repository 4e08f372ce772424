#include "rlpbwt/interval.hpp"

#include <algorithm>

namespace rlpbwt {

std::string to_string(const Interval& iv)
{
    return "[" + std::to_string(iv.b) + "," + std::to_string(iv.e) + "]";
}

IntervalList::IntervalList(std::initializer_list<Interval> items)
    : items_(items), n_(items_.empty() ? 0 : items_.back().e)
{
}

IntervalList IntervalList::from_starts(const std::vector<row_t>& starts, row_t n)
{
    std::vector<Interval> items;
    items.reserve(starts.size());
    for (std::size_t k = 0; k < starts.size(); ++k) {
        row_t e = k + 1 < starts.size() ? starts[k + 1] - 1 : n;
        items.push_back({starts[k], e});
    }
    return {std::move(items), n};
}

bool IntervalList::is_partition() const noexcept
{
    if (items_.empty())
        return n_ == 0;
    row_t next = 1;
    for (const auto& iv : items_) {
        if (iv.b != next || iv.e < iv.b)
            return false;
        next = iv.e + 1;
    }
    return items_.back().e == n_;
}

std::size_t IntervalList::covered() const noexcept
{
    std::size_t total = 0;
    for (const auto& iv : items_)
        total += iv.length();
    return total;
}

std::size_t IntervalList::find(row_t i) const noexcept
{
    auto it = std::upper_bound(items_.begin(), items_.end(), i,
                               [](row_t v, const Interval& iv) { return v < iv.b; });
    if (it == items_.begin())
        return 0;
    --it;
    if (!it->contains(i))
        return 0;
    return static_cast<std::size_t>(it - items_.begin()) + 1;
}

std::string to_string(const IntervalList& list)
{
    std::string out = "{";
    bool first = true;
    for (const auto& iv : list) {
        if (!first)
            out += ",";
        out += to_string(iv);
        first = false;
    }
    return out + "}";
}

} // namespace rlpbwt
