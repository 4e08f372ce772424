// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "golden.hpp"

#include "rlpbwt/bounds.hpp"
#include "rlpbwt/index_file.hpp"
#include "rlpbwt/normalize.hpp"
#include "rlpbwt/panel_index.hpp"
#include "rlpbwt/reference.hpp"
#include "rlpbwt/subruns.hpp"

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

using namespace rlpbwt;
namespace ref = rlpbwt::reference;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void fail(std::string msg)
    {
        pass = false;
        if (failures.size() < 5)
            failures.push_back(std::move(msg));
    }
    void absorb(const ref::Failures& fs)
    {
        for (const auto& f : fs)
            fail(f);
    }
};

int g_failed = 0;

void report(int id, const char* name, const std::function<Outcome()>& body, double limit_s = 0)
{
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (limit_s > 0 && secs >= limit_s)
        o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
    std::printf("criterion %2d %s  %s  [%s; %.2f s]\n", id, o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    for (const auto& f : o.failures)
        std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    g_failed += !o.pass;
}

std::vector<Panel> panels(std::uint64_t seed, std::size_t count, const ref::PanelShape& shape)
{
    ref::Rng rng(seed);
    std::vector<Panel> out;
    for (std::size_t k = 0; k < count; ++k)
        out.push_back(ref::random_panel(rng, shape));
    return out;
}

template <class T>
void expect_eq(Outcome& o, const T& got, const T& want, const std::string& what)
{
    if (!(got == want))
        o.fail(what + " mismatch");
}

Outcome worked_examples()
{
    Outcome o;
    const Normalized c = normalize(golden::kRunsCur, golden::kForeLSubIBPrev);
    expect_eq(o, c.intervals, golden::kSubIBCur, "normalization example");

    const MappedList mb = fore_map_traced(golden::kBackPrevColumn, false, golden::kSubIBPrev);
    expect_eq(o, mb.list, golden::kForeLSubIBPrev, "foreL(SubIB_{j-1})");
    expect_eq(o, normalize(extract_runs(golden::kBackCurColumn), mb.list).intervals, golden::kSubIBCur, "SubIB_j");

    const IntervalList runs = extract_runs(golden::kForeColumn);
    const MappedList mf = fore_map_traced(golden::kForeColumn, false, runs);
    const IntervalList prime = normalize(mf.list, golden::kSubIFNext).intervals;
    expect_eq(o, prime, golden::kSubIFPrime, "SubIF'_{j+1}");
    expect_eq(o, back_map_traced(golden::kForeColumn, false, prime).list, golden::kSubIF, "SubIF_j");

    std::vector<BackStepColumn> back;
    back.push_back(make_back_column(golden::kSubIBPrev, golden::kBackPrevColumn));
    back.push_back(make_back_column(golden::kSubIBPrev, mb, golden::kSubIBCur, golden::kBackCurColumn));
    const BackTuples& b3 = back[1].tuples.at(2);
    const std::vector<BackQuad> want_b{{6, 7, 1, 1}, {8, 9, 12, 7}, {10, 10, 14, 8}};
    expect_eq(o, std::vector<BackQuad>(b3.begin(), b3.end()), want_b, "B_j^3");
    const StepIndex bix({16, 2, 4, 10, false}, std::move(back), std::vector<ForeStepColumn>(2));
    expect_eq(o, bix.back_step(7, 2, 3), StepResult{2, 1}, "back_step(7,j,3)");

    std::vector<ForeStepColumn> fore;
    fore.push_back(make_fore_column(golden::kForeColumn, false, golden::kSubIF, &golden::kSubIFNext));
    fore.push_back(make_fore_column(std::vector<symbol_t>(16, 0), false, golden::kSubIFNext, nullptr));
    const ForeTuples& f4 = fore[0].tuples.at(3);
    const std::vector<ForeQuint> want_f{{11, 6, 6, 7, 4}, {11, 6, 8, 9, 5}, {11, 6, 10, 10, 6}};
    expect_eq(o, std::vector<ForeQuint>(f4.begin(), f4.end()), want_f, "F_j^4");
    const StepIndex fix({16, 2, 3, 4, false}, {}, std::move(fore));
    expect_eq(o, fix.fore_step(14, 1, 4), StepResult{9, 5}, "fore_step(14,j,4)");

    o.detail = "normalization, SubIB, SubIF, B_j^3, F_j^4, back_step(7,.,3)=(2,1), fore_step(14,.,4)=(9,5)";
    return o;
}

// Compares every step, search and extraction of two indexes over the same panel.
void compare_answers(Outcome& o, const Panel& p, const PanelIndex& a, const PanelIndex& b, ref::Rng& rng)
{
    const StepIndex& sa = a.steps();
    const StepIndex& sb = b.steps();
    const std::size_t w = sa.width();
    for (std::size_t j = 1; j <= w; ++j) {
        for (row_t i = 1; i <= sa.column_size(j); ++i) {
            const std::uint32_t x = sa.locate_fore(j, i);
            if (x != sb.locate_fore(j, i) || sa.symbol_at_fore(j, x) != sb.symbol_at_fore(j, x))
                return o.fail("fore sub-run lookup differs after reload");
            if (j < w && !(a.ragged() && sa.symbol_at_fore(j, x) == kTerminator) &&
                !(sa.fore_step(i, j, x) == sb.fore_step(i, j, x)))
                return o.fail("fore_step differs after reload");
            if (j > 1 && sa.has_back()) {
                const std::uint32_t y = sa.locate_back(j, i);
                if (!(sa.back_step(i, j, y) == sb.back_step(i, j, y)))
                    return o.fail("back_step differs after reload");
            }
        }
    }
    const symbol_t sigma = validate_panel(p).sigma;
    for (const auto& pat : ref::sample_patterns(rng, p, w, sigma, 40)) {
        if (!(a.prefix_search(pat) == b.prefix_search(pat)))
            return o.fail("prefix search differs after reload");
        if (a.sorted() && a.enumerate(pat).ids != b.enumerate(pat).ids)
            return o.fail("enumeration differs after reload");
    }
    for (row_t i = 1; i <= p.height(); ++i) {
        ExtractCounters ca, cb;
        if (a.extract(i, &ca) != b.extract(i, &cb) || ca.fore_steps != cb.fore_steps ||
            ca.symbol_reads != cb.symbol_reads)
            return o.fail("extraction differs after reload");
    }
}

} // namespace

int main()
{
    const ref::PanelShape fixed{.max_h = 32, .max_w = 32, .max_sigma = 4, .ragged = false};
    const ref::PanelShape ragged{.max_h = 32, .max_w = 32, .max_sigma = 4, .ragged = true};
    const auto fixed_panels = panels(1001, 1200, fixed);

    report(1, "normalization bound and three-overlap constraint", [] {
        Outcome o;
        ref::Rng rng(1);
        std::size_t pairs = 0, max_size = 0, tight_misses = 0;
        for (; pairs < 12000; ++pairs) {
            const row_t n = std::uniform_int_distribution<row_t>(1, 200)(rng);
            const IntervalList ip = ref::random_partition(rng, n);
            const IntervalList iq = ref::random_partition(rng, n);
            o.absorb(ref::check_normalize(ip, iq));
            const std::size_t size = normalize(ip, iq).intervals.size();
            max_size = std::max(max_size, size);
            tight_misses += size > ip.size() + (iq.size() - 1) / 3;
        }
        o.detail = std::to_string(pairs) + " pairs, n<=200, largest output " + std::to_string(max_size) +
                   ", |out| <= |ip| + (|iq|-1)/3 missed " + std::to_string(tight_misses) + " times";
        return o;
    }, 5.0);

    report(2, "worked stepping examples", worked_examples);

    report(3, "sub-run totals below 2 r~", [&] {
        Outcome o;
        for (const Panel& p : fixed_panels) {
            const PbwtColumns pc = build_pbwt(p);
            const SubRunLists sr = build_subruns(pc);
            if (sr.total_ib() >= 2 * pc.r_tilde || sr.total_if() >= 2 * pc.r_tilde)
                o.fail("sub-run total not below 2r~ on " + ref::describe(p));
            o.absorb(ref::check_subruns(p));
        }
        o.detail = std::to_string(fixed_panels.size()) + " panels, h,w<=32, sigma<=4";
        return o;
    });

    report(4, "stepping equals naive fore/back, exhaustive chains", [&] {
        Outcome o;
        std::size_t steps = 0;
        for (const Panel& p : fixed_panels)
            o.absorb(ref::check_stepping(p, &steps));
        o.detail = std::to_string(fixed_panels.size()) + " panels, " + std::to_string(steps) + " steps checked";
        return o;
    }, 30.0);

    report(5, "run-count bounds", [&] {
        Outcome o;
        for (const Panel& p : fixed_panels)
            o.absorb(ref::check_bounds(p));
        o.detail = std::to_string(fixed_panels.size()) + " panels, 6 inequalities each";
        return o;
    });

    const auto prefix_panels = panels(2002, 600, fixed);
    report(6, "prefix search equals linear-scan oracle", [&] {
        Outcome o;
        ref::Rng rng(6);
        std::size_t patterns = 0, empty_prefix = 0, missing_inside = 0;
        for (const Panel& p : prefix_panels) {
            const std::size_t w = validate_panel(p).w;
            const symbol_t sigma = validate_panel(p).sigma;
            const auto pats = ref::sample_patterns(rng, p, w, sigma, 80);
            o.absorb(ref::check_prefix(p, pats));
            patterns += pats.size();
            for (const auto& pat : pats) {
                const PrefixResult r = ref::oracle_prefix(p, pat, w);
                if (r.matched == 0 && !pat.empty())
                    ++empty_prefix;
                // The next symbol occurs in the column, just not under the matched prefix.
                if (r.matched < pat.size())
                    for (const auto& row : p.rows)
                        if (row[r.matched] == pat[r.matched]) {
                            ++missing_inside;
                            break;
                        }
            }
        }
        if (empty_prefix == 0 || missing_inside == 0)
            o.fail("edge cases not exercised");
        o.detail = std::to_string(prefix_panels.size()) + " panels, " + std::to_string(patterns) + " patterns (" +
                   std::to_string(empty_prefix) + " empty-prefix, " + std::to_string(missing_inside) +
                   " symbol absent from interval)";
        return o;
    }, 60.0);

    report(7, "sorted interval and enumeration", [&] {
        Outcome o;
        ref::Rng rng(7);
        for (const Panel& p : prefix_panels) {
            const auto info = validate_panel(p);
            o.absorb(ref::check_sorted(p, ref::sample_patterns(rng, p, info.w, info.sigma, 40)));
        }
        o.detail = std::to_string(prefix_panels.size()) + " panels";
        return o;
    });

    report(8, "retrieval reproduces rows with w-1 fore steps", [&] {
        Outcome o;
        std::size_t rows = 0;
        for (const auto* set : {&fixed_panels, &prefix_panels})
            for (const Panel& p : *set) {
                o.absorb(ref::check_retrieval(p));
                rows += p.height();
            }
        o.detail = std::to_string(rows) + " rows extracted";
        return o;
    });

    const auto ragged_panels = panels(3003, 600, ragged);
    report(9, "ragged mode", [&] {
        Outcome o;
        ref::Rng rng(9);
        for (const Panel& p : ragged_panels) {
            o.absorb(ref::check_pbwt(p));
            const PbwtColumns pc = build_pbwt(p);
            std::size_t hash_runs = 0;
            for (std::size_t j = 1; j <= pc.width(); ++j)
                for (const Interval& run : pc.runs_of(j))
                    hash_runs += pc.symbol(run.b, j) == kTerminator;
            if (pc.r_tilde > (pc.r_tilde - hash_runs) + p.height())
                o.fail("r~ > r~' + h on " + ref::describe(p));
            const auto info = validate_panel(p);
            o.absorb(ref::check_prefix(p, ref::sample_patterns(rng, p, info.w + 1, info.sigma, 60)));
            o.absorb(ref::check_stepping(p));
            o.absorb(ref::check_retrieval(p));
        }
        o.detail = std::to_string(ragged_panels.size()) + " ragged panels";
        return o;
    });

    report(10, "save/load round trip preserves answers", [&] {
        Outcome o;
        ref::Rng rng(10);
        const auto path = std::filesystem::temp_directory_path() /
                          ("rlpbwt_acceptance_" + std::to_string(::getpid()) + ".idx");
        std::size_t count = 0;
        auto run_set = [&](const std::vector<Panel>& set, std::size_t limit) {
            for (std::size_t k = 0; k < set.size() && k < limit; ++k, ++count) {
                const BuildOptions opts{.sorted = k % 2 == 1, .with_back = true};
                const PanelIndex ix = PanelIndex::build(set[k], opts);
                save_index(path, ix);
                const PanelIndex back = load_index(path);
                if (encode_index(back) != encode_index(ix))
                    o.fail("re-encoded bytes differ");
                compare_answers(o, set[k], ix, back, rng);
            }
        };
        run_set(fixed_panels, 300);
        run_set(ragged_panels, 100);
        std::filesystem::remove(path);
        o.detail = std::to_string(count) + " indexes through a file";
        return o;
    });

    std::printf("%s: %d of 10 criteria failed\n", g_failed ? "FAIL" : "PASS", g_failed);
    return g_failed ? 1 : 0;
}
