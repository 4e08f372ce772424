#include "golden.hpp"

#include "rlpbwt/bounds.hpp"
#include "rlpbwt/reference.hpp"

#include <doctest.h>

using namespace rlpbwt;
using golden::digits;

TEST_CASE("h'' counts adjacent differing rows in input order")
{
    CHECK(compute_h_pp(digits({"01", "10", "00"})) == 2);
    CHECK(compute_h_pp(digits({"11", "11", "11"})) == 0);
    CHECK(compute_h_pp(digits({"00", "01", "10", "11"})) == 3);
    CHECK(compute_h_pp(digits({"00", "11", "00"})) == 2);
}

TEST_CASE("canonical intervals")
{
    const Panel same = digits({"101", "101", "101"});
    const PbwtColumns pc = build_pbwt(same);
    for (std::size_t j = 1; j <= 3; ++j)
        CHECK(canonical_intervals(pc, same, j) == IntervalList{{1, 3}});

    const Panel distinct = digits({"00", "01", "10", "11"});
    const PbwtColumns pd = build_pbwt(distinct);
    for (std::size_t j = 1; j <= 2; ++j)
        CHECK(canonical_intervals(pd, distinct, j).size() == 4);
}

TEST_CASE("bounds on the three-row example")
{
    const BoundsReport r = compute_bounds(digits({"01", "10", "00"}));
    CHECK(r.h_pp == 2);
    CHECK(r.r_tilde == 5);
    CHECK(r.distinct == 3);
    CHECK(r.r_per_col == std::vector<std::size_t>{3, 2});
    CHECK(r.ell_per_col == std::vector<std::size_t>{3, 3});
    CHECK(r.checks.size() == 6);
    CHECK(r.all_pass());
}

TEST_CASE("identical rows meet the bounds with equality")
{
    const BoundsReport r = compute_bounds(digits({"0110", "0110", "0110"}));
    CHECK(r.h_pp == 0);
    CHECK(r.r_tilde == 4);
    CHECK(r.all_pass());
}

TEST_CASE("check_bounds flags violations")
{
    BoundsReport r;
    r.h = 3;
    r.w = 2;
    r.h_pp = 2;
    r.distinct = 3;
    r.r_tilde = 2;
    r.r_per_col = {1, 1};
    r.ell_per_col = {3, 3};
    check_bounds(r);
    CHECK_FALSE(r.all_pass());
    CHECK_FALSE(r.checks[0].pass);
    r.r_tilde = 5;
    r.ell_per_col = {2, 3};
    check_bounds(r);
    CHECK_FALSE(r.all_pass());
    CHECK(r.checks.back().name == "ell_monotone");
    CHECK_FALSE(r.checks.back().pass);
}

TEST_CASE("ragged panels are rejected")
{
    CHECK_THROWS_AS(compute_bounds(digits({"01", "1"}, true)), validation_error);
}

TEST_CASE("report formats")
{
    const BoundsReport r = compute_bounds(digits({"01", "10", "00"}));
    const std::string kv = format_report(r);
    CHECK(kv.find("h_pp=2\n") != std::string::npos);
    CHECK(kv.find("r_per_col=3,2\n") != std::string::npos);
    CHECK(kv.find("all_pass=true\n") != std::string::npos);
    CHECK(format_report_csv(r) == "column,r_j,ell_j\n1,3,3\n2,2,3\n");
}

TEST_CASE("property: every bound holds and matches the oracle")
{
    reference::Rng rng(79);
    for (int k = 0; k < 300; ++k) {
        const Panel p = reference::random_panel(rng, {.max_h = 32, .max_w = 20, .max_sigma = 4});
        const auto f = reference::check_bounds(p);
        CHECK_MESSAGE(f.empty(), (f.empty() ? "" : f.front()));
        CHECK(compute_bounds(p, Execution::serial).ell_per_col == compute_bounds(p).ell_per_col);
    }
}
