#include "golden.hpp"

#include "rlpbwt/normalize.hpp"
#include "rlpbwt/reference.hpp"

#include <doctest.h>

using namespace rlpbwt;

TEST_CASE("worked normalization example")
{
    const Normalized out = normalize(golden::kRunsCur, golden::kForeLSubIBPrev);
    CHECK(out.intervals == golden::kSubIBCur);
    CHECK(out.source == std::vector<std::uint32_t>{1, 2, 2, 2, 3});
}

TEST_CASE("overlap_count")
{
    const IntervalList& iq = golden::kForeLSubIBPrev;
    CHECK(overlap_count({2, 11}, iq) == 7);
    CHECK(overlap_count({1, 1}, iq) == 1);
    CHECK(overlap_count({12, 16}, iq) == 3);
    CHECK(overlap_count({1, 16}, iq) == 9);
}

TEST_CASE("short reference lists leave the input alone")
{
    CHECK(normalize({{1, 9}}, {{1, 9}}).intervals == IntervalList{{1, 9}});
    const IntervalList ip{{1, 4}, {5, 9}};
    CHECK(normalize(ip, {{1, 1}, {2, 2}, {3, 9}}).intervals == ip);
}

TEST_CASE("single interval over many unit intervals")
{
    std::vector<Interval> units;
    for (row_t i = 1; i <= 10; ++i)
        units.push_back({i, i});
    const IntervalList iq(units, 10);
    const Normalized out = normalize({{1, 10}}, iq);
    // Cuts after the 3rd, 6th and 9th overlapped interval.
    CHECK(out.intervals == IntervalList{{1, 3}, {4, 6}, {7, 9}, {10, 10}});
    CHECK(out.intervals.size() <= 1 + iq.size() / 2);
}

TEST_CASE("normalize validates its inputs")
{
    CHECK_THROWS_AS(normalize(IntervalList({{1, 2}, {4, 5}}, 5), {{1, 5}}), validation_error);
    CHECK_THROWS_AS(normalize({{1, 5}}, {{1, 6}}), validation_error);
}

TEST_CASE("property: matches the brute-force splitter and its invariants")
{
    reference::Rng rng(17);
    for (int k = 0; k < 3000; ++k) {
        const row_t n = std::uniform_int_distribution<row_t>(1, 50)(rng);
        const IntervalList ip = reference::random_partition(rng, n);
        const IntervalList iq = reference::random_partition(rng, n);
        const auto f = reference::check_normalize(ip, iq);
        CHECK_MESSAGE(f.empty(), (f.empty() ? "" : f.front()));
        // Each extra piece uses up three overlaps, and neighbours share at most one.
        CHECK(normalize(ip, iq).intervals.size() <= ip.size() + (iq.size() - 1) / 3);
    }
}
