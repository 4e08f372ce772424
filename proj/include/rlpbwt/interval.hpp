#pragma once

#include "rlpbwt/errors.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace rlpbwt {

/// Row positions, haplotype ids and sub-run indices. All public values are 1-based.
using row_t = std::uint32_t;
/// Panel symbols, drawn from {0..sigma-1}.
using symbol_t = std::uint32_t;

/// Closed interval [b, e] of positions, 1 <= b <= e.
struct Interval {
    row_t b = 0;
    row_t e = 0;

    constexpr row_t length() const noexcept { return e - b + 1; }
    constexpr bool contains(row_t i) const noexcept { return b <= i && i <= e; }
    friend constexpr bool operator==(const Interval&, const Interval&) = default;
};

constexpr bool interval_overlaps(const Interval& a, const Interval& b) noexcept
{
    return a.b <= b.e && b.b <= a.e;
}

std::string to_string(const Interval& iv);

/// Ordered list of intervals over the range [1..n]. Normally a partition
/// (contiguous, disjoint, covering); see is_partition().
class IntervalList {
public:
    IntervalList() = default;
    IntervalList(std::vector<Interval> items, row_t n) : items_(std::move(items)), n_(n) {}
    /// Builds a list whose range is the right endpoint of the last item.
    IntervalList(std::initializer_list<Interval> items);

    /// Partition from left endpoints of each block and the range length.
    static IntervalList from_starts(const std::vector<row_t>& starts, row_t n);

    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }
    row_t n() const noexcept { return n_; }

    /// 1-based access, matching sub-run numbering.
    const Interval& at(std::size_t k) const { return items_.at(k - 1); }
    const Interval& operator[](std::size_t idx0) const noexcept { return items_[idx0]; }

    auto begin() const noexcept { return items_.begin(); }
    auto end() const noexcept { return items_.end(); }
    const std::vector<Interval>& items() const noexcept { return items_; }

    void push_back(Interval iv) { items_.push_back(iv); }
    void set_n(row_t n) noexcept { n_ = n; }

    /// Single linear scan: items[0].b = 1, items.back().e = n, contiguous.
    bool is_partition() const noexcept;
    /// Sum of lengths.
    std::size_t covered() const noexcept;
    /// Index (1-based) of the item containing position i, by binary search; 0 if none.
    std::size_t find(row_t i) const noexcept;

    friend bool operator==(const IntervalList&, const IntervalList&) = default;

private:
    std::vector<Interval> items_;
    row_t n_ = 0;
};

std::string to_string(const IntervalList& list);

} // namespace rlpbwt
