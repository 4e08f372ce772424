#include "golden.hpp"

#include "rlpbwt/kernels.hpp"
#include "rlpbwt/panel_index.hpp"
#include "rlpbwt/prefix_search.hpp"
#include "rlpbwt/rank_select.hpp"
#include "rlpbwt/reference.hpp"

#include <doctest.h>

#include <algorithm>

using namespace rlpbwt;
using golden::digits;

namespace {

Haplotype pat(const std::string& s)
{
    Haplotype h;
    for (char c : s)
        h.push_back(static_cast<symbol_t>(c - '0'));
    return h;
}

} // namespace

TEST_CASE("rank and select over a small value array")
{
    const std::vector<symbol_t> vals{1, 0, 0};
    const SymbolRankSelect rs(vals);
    CHECK(rs.rank(0, 3) == 2);
    CHECK(rs.rank(1, 1) == 1);
    CHECK(rs.rank(2, 3) == 0);
    CHECK(rs.select(0, 1) == 2);
    CHECK(rs.select(0, 2) == 3);
    CHECK(rs.select(0, 3) == 4);
    CHECK(rs.select(7, 1) == 4);
}

TEST_CASE("property: rank/select against a linear scan")
{
    reference::Rng rng(41);
    for (int k = 0; k < 200; ++k) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
        std::vector<symbol_t> vals(n);
        for (auto& v : vals)
            v = static_cast<symbol_t>(rng() % 5);
        const SymbolRankSelect rs(vals);
        for (symbol_t c = 0; c < 6; ++c) {
            std::uint32_t count = 0;
            for (std::uint32_t x = 1; x <= n; ++x) {
                count += vals[x - 1] == c;
                CHECK(rs.rank(c, x) == count);
                if (vals[x - 1] == c)
                    CHECK(rs.select(c, count) == x);
                CHECK(rs.select(c, rs.rank(c, x)) <= (rs.rank(c, x) == 0 ? n + 1 : x));
            }
            CHECK(rs.select(c, count + 1) == n + 1);
        }
    }
}

TEST_CASE("partial prefix search on the three-row example")
{
    const PrefixSearchIndex ix = build_prefix_index(digits({"01", "10", "00"}), false);
    CHECK(partial_prefix_search(ix, pat("00")) == PrefixResult{2, 1, 3});
    CHECK(partial_prefix_search(ix, pat("11")) == PrefixResult{1, 1, 2});
    CHECK(partial_prefix_search(ix, pat("")) == PrefixResult{0, 3, 1});
    CHECK(partial_prefix_search(ix, pat("0")) == PrefixResult{1, 2, 1});
    CHECK(partial_prefix_search(ix, pat("01")) == PrefixResult{2, 1, 1});
    // Longer than w: only the first w symbols count.
    CHECK(partial_prefix_search(ix, pat("1000")) == PrefixResult{2, 1, 2});
    // Out-of-alphabet symbol ends the match at its column.
    CHECK(partial_prefix_search(ix, pat("07")) == PrefixResult{1, 2, 1});
    CHECK(partial_prefix_search(ix, pat("9")) == PrefixResult{0, 3, 1});
    std::size_t total = 0;
    for (std::size_t j = 1; j <= 2; ++j)
        total += ix.s_pa(j).size();
    CHECK(total < 10);
}

TEST_CASE("no occurrence of the next symbol inside the current interval")
{
    // Column 2 holds a 1 only outside the interval of prefix "0".
    const PrefixSearchIndex ix = build_prefix_index(digits({"00", "11", "10"}), false);
    CHECK(partial_prefix_search(ix, pat("01")) == PrefixResult{1, 1, 1});
}

TEST_CASE("single haplotype")
{
    const PrefixSearchIndex ix = build_prefix_index(digits({"0120"}), false);
    for (std::size_t j = 1; j <= 4; ++j) {
        CHECK(ix.s_pa(j).size() == 1);
        CHECK(ix.s_count(j).size() == 1);
        CHECK(ix.s_val(j).size() == 1);
    }
    CHECK(partial_prefix_search(ix, pat("012")) == PrefixResult{3, 1, 1});
    CHECK(partial_prefix_search(ix, pat("2")) == PrefixResult{0, 1, 1});
}

TEST_CASE("sorted variant")
{
    const PrefixSearchIndex ix = build_prefix_index(digits({"00", "01", "10"}), true);
    CHECK(prefix_search_sorted(ix, pat("0")) == SortedPrefixResult{1, 1, 2});
    CHECK(prefix_search_sorted(ix, pat("01")) == SortedPrefixResult{2, 2, 2});
    CHECK(prefix_search_sorted(ix, pat("")) == SortedPrefixResult{0, 1, 3});
    const PrefixSearchIndex plain = build_prefix_index(digits({"00", "01", "10"}), false);
    CHECK_THROWS_AS(prefix_search_sorted(plain, pat("0")), std::logic_error);
}

TEST_CASE("enumeration reports original ids")
{
    const PrefixSearchIndex ix = build_prefix_index(digits({"01", "10", "00"}), true);
    CHECK(std::vector<row_t>(ix.perm_inv().begin(), ix.perm_inv().end()) == std::vector<row_t>{3, 1, 2});
    Enumeration en = enumerate_prefixed(ix, pat("0"));
    CHECK(en.matched == 1);
    CHECK(en.ids == std::vector<row_t>{3, 1});
    en = enumerate_prefixed(ix, pat(""));
    CHECK(en.ids == std::vector<row_t>{3, 1, 2});
    en = enumerate_prefixed(ix, pat("2"));
    CHECK(en.matched == 0);
    CHECK(en.ids.size() == 3);
}

TEST_CASE("PanelIndex maps sorted witnesses back to original ids")
{
    const Panel p = digits({"11", "01", "10", "00"});
    const PanelIndex ix = PanelIndex::build(p, {.sorted = true});
    const PrefixResult r = ix.prefix_search(pat("1"));
    CHECK(r.matched == 1);
    CHECK(r.occ == 2);
    CHECK((r.index == 1 || r.index == 3));
    for (row_t id = 1; id <= 4; ++id)
        CHECK(ix.extract(id) == p.rows[id - 1]);
    CHECK_THROWS_AS(ix.extract(5), std::out_of_range);
}

TEST_CASE("property: witness invariant and oracle agreement on small panels")
{
    reference::Rng rng(43);
    for (int k = 0; k < 300; ++k) {
        const Panel p = reference::random_panel(rng, {.max_h = 12, .max_w = 10, .max_sigma = 4, .ragged = k % 3 == 0});
        const symbol_t sigma = validate_panel(p).sigma;
        const auto pats = reference::sample_patterns(rng, p, 11, sigma, 40);
        auto f = reference::check_prefix(p, pats);
        CHECK_MESSAGE(f.empty(), (f.empty() ? "" : f.front()));
        f = reference::check_sorted(p, pats);
        CHECK_MESSAGE(f.empty(), (f.empty() ? "" : f.front()));
    }
}

TEST_CASE("property: every pattern over a tiny alphabet")
{
    reference::Rng rng(47);
    for (int k = 0; k < 60; ++k) {
        const Panel p = reference::random_panel(rng, {.max_h = 10, .max_w = 5, .max_sigma = 2, .ragged = k % 2 == 0});
        std::vector<Haplotype> all{{}};
        for (std::size_t len = 1; len <= 5; ++len)
            for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
                Haplotype h;
                for (std::size_t t = 0; t < len; ++t)
                    h.push_back((bits >> t) & 1u);
                all.push_back(h);
            }
        const auto f = reference::check_prefix(p, all);
        CHECK_MESSAGE(f.empty(), (f.empty() ? "" : f.front()));
    }
}

TEST_CASE("ragged panels: prefix search sees the stored lengths")
{
    const Panel p = digits({"01", "1", "010", ""}, true);
    const PrefixSearchIndex ix = build_prefix_index(p, false);
    CHECK(partial_prefix_search(ix, pat("010")) == PrefixResult{3, 1, 3});
    CHECK(partial_prefix_search(ix, pat("01")) == PrefixResult{2, 2, 1});
    CHECK(partial_prefix_search(ix, pat("11")) == PrefixResult{1, 1, 2});
    CHECK(partial_prefix_search(ix, pat("")) == PrefixResult{0, 4, 1});
    CHECK(partial_prefix_search(ix, pat("0100")) == PrefixResult{3, 1, 3});
}

TEST_CASE("batch search matches one-by-one search")
{
    reference::Rng rng(53);
    const Panel p = reference::random_panel(rng, {.max_h = 30, .max_w = 30, .max_sigma = 3});
    const PrefixSearchIndex ix = build_prefix_index(p, false);
    const auto pats = reference::sample_patterns(rng, p, 30, 3, 200);
    const auto serial = prefix_search_batch(ix, pats, Execution::serial);
    const auto parallel = prefix_search_batch(ix, pats, Execution::parallel);
    CHECK(serial == parallel);
    for (std::size_t k = 0; k < pats.size(); ++k)
        CHECK(serial[k] == ix.search(pats[k]));
}
