#include "rlpbwt/reference.hpp"

#include "rlpbwt/bounds.hpp"
#include "rlpbwt/kernels.hpp"
#include "rlpbwt/panel_index.hpp"
#include "rlpbwt/retrieval.hpp"
#include "rlpbwt/step_index.hpp"
#include "rlpbwt/subruns.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace rlpbwt::reference {
namespace {

symbol_t internal_symbol(const Panel& p, row_t id, std::size_t j)
{
    const auto& row = p.rows[id - 1];
    if (!p.ragged)
        return row[j - 1];
    return j <= row.size() ? row[j - 1] + 1 : 0;
}

IntervalList scan_runs(const std::vector<symbol_t>& col)
{
    std::vector<Interval> out;
    std::size_t i = 0;
    while (i < col.size()) {
        std::size_t k = i;
        while (k + 1 < col.size() && col[k + 1] == col[i])
            ++k;
        out.push_back({static_cast<row_t>(i + 1), static_cast<row_t>(k + 1)});
        i = k + 1;
    }
    return {std::move(out), static_cast<row_t>(col.size())};
}

std::size_t count_overlaps(const Interval& iv, const IntervalList& ref)
{
    std::size_t k = 0;
    for (const Interval& r : ref)
        k += interval_overlaps(iv, r);
    return k;
}

std::string str(const Haplotype& h)
{
    std::string s;
    for (std::size_t k = 0; k < h.size(); ++k) {
        if (k)
            s += ' ';
        s += std::to_string(h[k]);
    }
    return "[" + s + "]";
}

template <class... Parts>
std::string cat(const Parts&... parts)
{
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

row_t run_end(const std::vector<row_t>& starts, row_t n, std::uint32_t x)
{
    return x < starts.size() ? starts[x] - 1 : n;
}

} // namespace

PbwtColumns brute_pbwt(const Panel& p)
{
    const PanelReport rep = validate_panel(p);
    PbwtColumns pc;
    pc.h = rep.h;
    pc.terminator_mode = p.ragged;
    pc.sigma = p.ragged ? rep.sigma + 1 : rep.sigma;
    const std::size_t w = p.ragged ? rep.w + 1 : rep.w;
    for (std::size_t j = 1; j <= w; ++j) {
        std::vector<row_t> ids;
        for (row_t id = 1; id <= rep.h; ++id)
            if (!p.ragged || p.rows[id - 1].size() + 1 >= j)
                ids.push_back(id);
        std::sort(ids.begin(), ids.end(), [&](row_t a, row_t b) {
            for (std::size_t k = j - 1; k >= 1; --k) {
                const symbol_t sa = internal_symbol(p, a, k);
                const symbol_t sb = internal_symbol(p, b, k);
                if (sa != sb)
                    return sa < sb;
            }
            return a < b;
        });
        std::vector<symbol_t> col;
        for (row_t id : ids)
            col.push_back(internal_symbol(p, id, j));
        pc.runs.push_back(scan_runs(col));
        pc.r_tilde += pc.runs.back().size();
        pc.pbwt.push_back(std::move(col));
        pc.pa.push_back(std::move(ids));
    }
    return pc;
}

std::vector<std::vector<row_t>> pa_positions(const PbwtColumns& pc)
{
    std::vector<std::vector<row_t>> pos(pc.width(), std::vector<row_t>(pc.h, 0));
    for (std::size_t j = 0; j < pc.width(); ++j)
        for (std::size_t i = 0; i < pc.pa[j].size(); ++i)
            pos[j][pc.pa[j][i] - 1] = static_cast<row_t>(i + 1);
    return pos;
}

Normalized brute_normalize(const IntervalList& ip, const IntervalList& iq)
{
    Normalized out;
    std::vector<Interval> items;
    for (std::size_t k = 0; k < ip.size(); ++k) {
        const Interval iv = ip[k];
        std::vector<Interval> hits;
        for (const Interval& q : iq)
            if (interval_overlaps(iv, q))
                hits.push_back(q);
        row_t b = iv.b;
        std::size_t pos = 0;
        while (hits.size() - pos >= 4) {
            items.push_back({b, hits[pos + 2].e});
            out.source.push_back(static_cast<std::uint32_t>(k + 1));
            b = hits[pos + 2].e + 1;
            pos += 3;
        }
        items.push_back({b, iv.e});
        out.source.push_back(static_cast<std::uint32_t>(k + 1));
    }
    out.intervals = IntervalList(std::move(items), ip.n());
    return out;
}

std::size_t common_prefix(std::span<const symbol_t> row, std::span<const symbol_t> pattern)
{
    std::size_t k = 0;
    while (k < row.size() && k < pattern.size() && row[k] == pattern[k])
        ++k;
    return k;
}

PrefixResult oracle_prefix(const Panel& p, std::span<const symbol_t> pattern, std::size_t max_len)
{
    const auto pat = pattern.first(std::min(pattern.size(), max_len));
    std::size_t best = 0;
    for (const auto& row : p.rows)
        best = std::max(best, common_prefix(row, pat));
    PrefixResult r{best, 0, 0};
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        if (common_prefix(p.rows[i], pat) >= best) {
            ++r.occ;
            if (r.index == 0)
                r.index = static_cast<row_t>(i + 1);
        }
    }
    return r;
}

std::vector<row_t> oracle_prefixed_ids(const Panel& p, std::span<const symbol_t> pattern, std::size_t max_len)
{
    const auto pat = pattern.first(std::min(pattern.size(), max_len));
    const std::size_t best = oracle_prefix(p, pattern, max_len).matched;
    std::vector<row_t> ids;
    for (std::size_t i = 0; i < p.rows.size(); ++i)
        if (common_prefix(p.rows[i], pat) >= best)
            ids.push_back(static_cast<row_t>(i + 1));
    return ids;
}

IntervalList oracle_canonical(const Panel& p, std::span<const row_t> pa)
{
    std::vector<Interval> out;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        if (i > 0 && p.rows[pa[i] - 1] == p.rows[pa[i - 1] - 1])
            out.back().e = static_cast<row_t>(i + 1);
        else
            out.push_back({static_cast<row_t>(i + 1), static_cast<row_t>(i + 1)});
    }
    return {std::move(out), static_cast<row_t>(pa.size())};
}

Panel random_panel(Rng& rng, const PanelShape& shape)
{
    auto uniform = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    Panel p;
    p.ragged = shape.ragged;
    const auto sigma = static_cast<symbol_t>(uniform(1, shape.max_sigma));
    const std::size_t h = uniform(1, shape.max_h);
    const std::size_t w = uniform(1, shape.max_w);
    // Low-entropy panels exercise long runs; the duplicate rate varies per panel.
    const double dup = std::uniform_real_distribution<double>(0.0, 0.8)(rng);
    const double flip = std::uniform_real_distribution<double>(0.02, 1.0)(rng);
    for (std::size_t i = 0; i < h; ++i) {
        Haplotype row;
        if (i > 0 && std::bernoulli_distribution(dup)(rng)) {
            row = p.rows[uniform(0, i - 1)];
            if (shape.ragged && std::bernoulli_distribution(0.3)(rng))
                row.resize(uniform(0, row.size()));
        } else {
            const std::size_t len = shape.ragged ? uniform(0, w) : w;
            const Haplotype* base = i > 0 ? &p.rows[uniform(0, i - 1)] : nullptr;
            for (std::size_t k = 0; k < len; ++k) {
                if (base && k < base->size() && !std::bernoulli_distribution(flip)(rng))
                    row.push_back((*base)[k]);
                else
                    row.push_back(static_cast<symbol_t>(uniform(0, sigma - 1)));
            }
        }
        p.rows.push_back(std::move(row));
    }
    if (std::bernoulli_distribution(0.5)(rng))
        p.sigma = sigma;
    return p;
}

IntervalList random_partition(Rng& rng, row_t n)
{
    const double mean = std::uniform_real_distribution<double>(1.0, std::max(1.0, n / 2.0))(rng);
    std::geometric_distribution<row_t> len(1.0 / mean);
    std::vector<row_t> starts;
    row_t b = 1;
    while (b <= n) {
        starts.push_back(b);
        b += 1 + len(rng);
    }
    return IntervalList::from_starts(starts, n);
}

std::vector<Haplotype> sample_patterns(Rng& rng, const Panel& p, std::size_t max_len, symbol_t sigma,
                                       std::size_t count)
{
    auto uniform = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    std::vector<Haplotype> out;
    out.push_back({});
    for (std::size_t k = 0; k < count; ++k) {
        Haplotype pat;
        switch (k % 4) {
        case 0: {
            const auto& row = p.rows[uniform(0, p.rows.size() - 1)];
            pat.assign(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(uniform(0, row.size())));
            break;
        }
        case 1: {
            // A row prefix followed by a random tail: usually diverges mid-column.
            const auto& row = p.rows[uniform(0, p.rows.size() - 1)];
            pat.assign(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(uniform(0, row.size())));
            const std::size_t extra = uniform(1, 3);
            for (std::size_t t = 0; t < extra && pat.size() < max_len; ++t)
                pat.push_back(static_cast<symbol_t>(uniform(0, sigma)));
            break;
        }
        default: {
            const std::size_t len = uniform(0, max_len);
            for (std::size_t t = 0; t < len; ++t)
                pat.push_back(static_cast<symbol_t>(uniform(0, sigma == 0 ? 0 : sigma - 1)));
        }
        }
        out.push_back(std::move(pat));
    }
    return out;
}

Failures check_normalize(const IntervalList& ip, const IntervalList& iq)
{
    Failures f;
    const Normalized got = normalize(ip, iq);
    const auto& out = got.intervals;
    const std::string ctx = cat(" (ip=", to_string(ip), " iq=", to_string(iq), ")");
    if (!out.is_partition() || out.n() != ip.n())
        f.push_back("output is not a partition of [1,n]" + ctx);
    const std::size_t bound = ip.size() + iq.size() / 2;
    if (out.size() > bound)
        f.push_back(cat("size ", out.size(), " exceeds ", bound, ctx));
    if (iq.size() > 3) {
        for (const Interval& iv : out)
            if (count_overlaps(iv, iq) > 3)
                f.push_back(cat(to_string(iv), " overlaps more than three intervals", ctx));
    } else if (out != ip) {
        f.push_back("short reference must leave the input unchanged" + ctx);
    }
    if (got.source.size() != out.size()) {
        f.push_back("source list length mismatch" + ctx);
    } else {
        for (std::size_t k = 0; k < out.size(); ++k) {
            const auto src = got.source[k];
            if (src < 1 || src > ip.size() || out[k].b < ip.at(src).b || out[k].e > ip.at(src).e)
                f.push_back(cat(to_string(out[k]), " not inside its source interval", ctx));
        }
    }
    const Normalized want = brute_normalize(ip, iq);
    if (want.intervals != out || want.source != got.source)
        f.push_back("differs from brute-force splitter: got " + to_string(out) + " want " +
                    to_string(want.intervals) + ctx);
    return f;
}

Failures check_pbwt(const Panel& p)
{
    Failures f;
    const PbwtColumns got = build_pbwt(p);
    const PbwtColumns want = brute_pbwt(p);
    if (got.width() != want.width())
        return {cat("width ", got.width(), " want ", want.width())};
    for (std::size_t j = 1; j <= got.width(); ++j) {
        if (got.pbwt[j - 1] != want.pbwt[j - 1])
            f.push_back(cat("PBWT column ", j, " differs"));
        if (got.pa[j - 1] != want.pa[j - 1])
            f.push_back(cat("PA column ", j, " differs"));
        if (got.runs[j - 1] != want.runs[j - 1])
            f.push_back(cat("runs of column ", j, " differ"));
    }
    if (got.r_tilde != want.r_tilde)
        f.push_back(cat("r~ ", got.r_tilde, " want ", want.r_tilde));
    if (got.sigma != want.sigma)
        f.push_back(cat("sigma ", got.sigma, " want ", want.sigma));
    // fore from the counting table must agree with PA positions.
    const auto pos = pa_positions(want);
    for (std::size_t j = 1; j < got.width(); ++j) {
        const auto fore = fore_table(got.column(j), got.terminator_mode);
        for (row_t i = 1; i <= got.column_size(j); ++i) {
            const row_t expect =
                got.terminator_mode && got.symbol(i, j) == kTerminator ? 0 : pos[j][want.pa_at(i, j) - 1];
            if (fore[i - 1] != expect)
                f.push_back(cat("fore_table(", i, ",", j, ")=", fore[i - 1], " want ", expect));
        }
    }
    return f;
}

Failures check_subruns(const Panel& p)
{
    Failures f;
    const PbwtColumns pc = build_pbwt(p);
    const SubRunLists sr = build_subruns(pc);
    const std::size_t w = pc.width();
    if (sr.subib.size() != w || sr.subif.size() != w)
        return {"sub-run list count differs from width"};
    if (sr.total_ib() >= 2 * pc.r_tilde)
        f.push_back(cat("sum |SubIB| = ", sr.total_ib(), " not below 2r~ = ", 2 * pc.r_tilde));
    if (sr.total_if() >= 2 * pc.r_tilde)
        f.push_back(cat("sum |SubIF| = ", sr.total_if(), " not below 2r~ = ", 2 * pc.r_tilde));

    auto check_list = [&](const IntervalList& list, std::size_t j, const char* name) {
        const auto col = pc.column(j);
        if (!list.is_partition() || list.n() != col.size())
            f.push_back(cat(name, "_", j, " is not a partition of the column"));
        for (const Interval& iv : list)
            for (row_t i = iv.b; i <= iv.e && i <= col.size(); ++i)
                if (col[i - 1] != col[iv.b - 1]) {
                    f.push_back(cat(name, "_", j, " interval ", to_string(iv), " spans a run boundary"));
                    break;
                }
        for (const Interval& run : pc.runs_of(j))
            if (list.find(run.b) == 0 || list.at(list.find(run.b)).b != run.b)
                f.push_back(cat(name, "_", j, " does not start a sub-run at run start ", run.b));
    };
    for (std::size_t j = 1; j <= w; ++j) {
        check_list(sr.ib(j), j, "SubIB");
        check_list(sr.if_(j), j, "SubIF");
    }
    for (std::size_t j = 2; j <= w; ++j) {
        const IntervalList mapped = fore_map(pc, j - 1, sr.ib(j - 1));
        for (const Interval& iv : sr.ib(j))
            if (count_overlaps(iv, mapped) > 3)
                f.push_back(cat("SubIB_", j, " interval ", to_string(iv), " overlaps > 3 mapped intervals"));
    }
    for (std::size_t j = 1; j < w; ++j) {
        const IntervalList mapped = fore_map(pc, j, sr.if_(j));
        for (const Interval& iv : mapped)
            if (count_overlaps(iv, sr.if_(j + 1)) > 3)
                f.push_back(cat("foreL(SubIF_", j, ") interval ", to_string(iv), " overlaps > 3 of SubIF_", j + 1));
    }
    return f;
}

Failures check_stepping(const Panel& p, std::size_t* steps_done)
{
    Failures f;
    const PbwtColumns pc = build_pbwt(p);
    const PbwtColumns ref = brute_pbwt(p);
    const auto pos = pa_positions(ref);
    const SubRunLists sr = build_subruns(pc);
    const StepIndex ix = build_step_index(pc, sr, Execution::serial);
    if (!(build_step_index(pc, sr, Execution::parallel) == ix))
        f.push_back("parallel step index differs from serial build");
    const std::size_t w = pc.width();
    const bool tm = pc.terminator_mode;
    std::size_t steps = 0;

    for (std::size_t j = 1; j <= w; ++j)
        for (const auto& list : ix.fore_column(j).tuples)
            if (list.size() > 3)
                f.push_back("fore tuple list longer than three");
    if (ix.word_count() > 24 * pc.r_tilde)
        f.push_back(cat("word count ", ix.word_count(), " exceeds 24 r~ = ", 24 * pc.r_tilde));

    auto inside = [](const auto& col, std::uint32_t x, row_t row) {
        return x >= 1 && x <= col.starts.size() && col.starts[x - 1] <= row && row <= run_end(col.starts, col.n, x);
    };

    // Fore: every start (i, j), one naive comparison, then the chain to the end.
    for (std::size_t j0 = 1; j0 < w && f.size() < 20; ++j0) {
        for (row_t i0 = 1; i0 <= pc.column_size(j0); ++i0) {
            row_t i = i0;
            std::uint32_t x = ix.locate_fore(j0, i);
            for (std::size_t j = j0; j < w; ++j) {
                const symbol_t c = ix.symbol_at_fore(j, x);
                if (c != pc.symbol(i, j)) {
                    f.push_back(cat("symbol_at_fore(", j, ",", x, ")=", c, " want ", pc.symbol(i, j)));
                    break;
                }
                if (tm && c == kTerminator)
                    break;
                const StepResult r = ix.fore_step(i, j, x);
                ++steps;
                const row_t want = pos[j][ref.pa_at(i, j) - 1];
                if (j == j0 && naive_fore(pc, i, j) != want)
                    f.push_back(cat("naive_fore(", i, ",", j, ") disagrees with PA"));
                if (r.row != want) {
                    f.push_back(cat("fore_step(", i, ",", j, ",", x, ")=", r.row, " want ", want));
                    break;
                }
                if (!inside(ix.fore_column(j + 1), r.subrun, r.row)) {
                    f.push_back(cat("fore_step(", i, ",", j, ") sub-run ", r.subrun, " misses row ", r.row));
                    break;
                }
                i = r.row;
                x = r.subrun;
            }
        }
    }
    // Back: every start (i, j), chained down to column 1.
    for (std::size_t j0 = 2; j0 <= w && f.size() < 20; ++j0) {
        for (row_t i0 = 1; i0 <= pc.column_size(j0); ++i0) {
            row_t i = i0;
            std::uint32_t x = ix.locate_back(j0, i);
            for (std::size_t j = j0; j > 1; --j) {
                if (ix.symbol_at_back(j, x) != pc.symbol(i, j)) {
                    f.push_back(cat("symbol_at_back(", j, ",", x, ") wrong"));
                    break;
                }
                const StepResult r = ix.back_step(i, j, x);
                ++steps;
                const row_t want = pos[j - 2][ref.pa_at(i, j) - 1];
                if (j == j0 && naive_back(pc, i, j) != want)
                    f.push_back(cat("naive_back(", i, ",", j, ") disagrees with PA"));
                if (r.row != want) {
                    f.push_back(cat("back_step(", i, ",", j, ",", x, ")=", r.row, " want ", want));
                    break;
                }
                if (!inside(ix.back_column(j - 1), r.subrun, r.row)) {
                    f.push_back(cat("back_step(", i, ",", j, ") sub-run ", r.subrun, " misses row ", r.row));
                    break;
                }
                i = r.row;
                x = r.subrun;
            }
        }
    }
    if (steps_done)
        *steps_done += steps;
    return f;
}

Failures check_bounds(const Panel& p)
{
    Failures f;
    const BoundsReport r = compute_bounds(p, Execution::serial);
    for (const auto& c : r.checks)
        if (!c.pass)
            f.push_back("bound " + c.name + " failed: " + c.detail);

    const PbwtColumns ref = brute_pbwt(p);
    std::size_t h_pp = 0;
    for (std::size_t i = 1; i < p.rows.size(); ++i)
        h_pp += p.rows[i] != p.rows[i - 1];
    if (r.h_pp != h_pp)
        f.push_back(cat("h'' ", r.h_pp, " want ", h_pp));
    if (r.distinct != std::set<Haplotype>(p.rows.begin(), p.rows.end()).size())
        f.push_back("distinct row count wrong");
    for (std::size_t j = 1; j <= ref.width(); ++j) {
        const IntervalList want = oracle_canonical(p, ref.pa[j - 1]);
        const IntervalList got = canonical_intervals(build_pbwt(p), p, j);
        if (got != want)
            f.push_back(cat("canonical intervals of column ", j, " differ"));
        if (r.ell_per_col.at(j - 1) != want.size())
            f.push_back(cat("ell_", j, " = ", r.ell_per_col[j - 1], " want ", want.size()));
        if (r.r_per_col.at(j - 1) != ref.runs[j - 1].size())
            f.push_back(cat("r_", j, " wrong"));
    }
    if (r.r_tilde != ref.r_tilde)
        f.push_back("r~ wrong");
    return f;
}

Failures check_prefix(const Panel& p, const std::vector<Haplotype>& patterns)
{
    Failures f;
    const PbwtColumns pc = build_pbwt(p);
    const PbwtColumns ref = brute_pbwt(p);
    const PrefixSearchIndex ix = build_prefix_index(p, false);
    const std::size_t w = ix.width();
    for (const auto& pat : patterns) {
        const PrefixResult want = oracle_prefix(p, pat, w);
        std::string shadow_error;
        const PrefixResult got = ix.search(pat, [&](std::size_t j, row_t b, row_t index) {
            if (shadow_error.empty() && ref.pa_at(b, j) != index)
                shadow_error = cat("witness ", index, " != PA_", j, "[", b, "] = ", ref.pa_at(b, j));
        });
        if (!(got == want))
            f.push_back(cat("prefix ", str(pat), " on ", describe(p), ": got (", got.matched, ",", got.occ, ",",
                            got.index, ") want (", want.matched, ",", want.occ, ",", want.index, ")"));
        if (!shadow_error.empty())
            f.push_back("prefix " + str(pat) + ": " + shadow_error);
        if (f.size() >= 20)
            break;
    }
    const auto batch = prefix_search_batch(ix, patterns, Execution::parallel);
    for (std::size_t k = 0; k < patterns.size(); ++k)
        if (!(batch[k] == ix.search(patterns[k]))) {
            f.push_back("parallel batch search differs from single search");
            break;
        }
    return f;
}

Failures check_sorted(const Panel& p, const std::vector<Haplotype>& patterns)
{
    Failures f;
    const PrefixSearchIndex ix = build_prefix_index(p, true);
    const auto order = lexicographic_order(p);
    Panel sorted = p;
    for (std::size_t k = 0; k < order.size(); ++k)
        sorted.rows[k] = p.rows[order[k] - 1];
    const std::size_t w = ix.width();
    for (const auto& pat : patterns) {
        const PrefixResult want = oracle_prefix(sorted, pat, w);
        const SortedPrefixResult got = prefix_search_sorted(ix, pat);
        const SortedPrefixResult expect{want.matched, want.index, static_cast<row_t>(want.index + want.occ - 1)};
        if (!(got == expect))
            f.push_back(cat("sorted ", str(pat), ": got (", got.matched, ",[", got.first, ",", got.last, "]) want (",
                            expect.matched, ",[", expect.first, ",", expect.last, "])"));
        // Every row in the range carries the prefix, and the range is maximal.
        const auto pref = std::span<const symbol_t>(pat).first(std::min(pat.size(), w)).first(got.matched);
        for (row_t t = 1; t <= sorted.rows.size(); ++t) {
            const bool has = common_prefix(sorted.rows[t - 1], pref) == pref.size();
            if (has != (got.first <= t && t <= got.last)) {
                f.push_back(cat("sorted range for ", str(pat), " is not exactly the prefixed rows"));
                break;
            }
        }
        Enumeration en = enumerate_prefixed(ix, pat);
        auto ids = en.ids;
        std::sort(ids.begin(), ids.end());
        if (en.matched != want.matched || ids != oracle_prefixed_ids(p, pat, w))
            f.push_back("enumeration for " + str(pat) + " differs from oracle id set");
        if (f.size() >= 20)
            break;
    }
    return f;
}

Failures check_retrieval(const Panel& p)
{
    Failures f;
    const PanelIndex ix = PanelIndex::build(p, {.sorted = false, .with_back = false, .exec = Execution::serial});
    const std::size_t w = ix.width();
    for (row_t i = 1; i <= p.rows.size(); ++i) {
        ExtractCounters counters;
        const Haplotype got = ix.extract(i, &counters);
        if (got != p.rows[i - 1])
            f.push_back(cat("extract(", i, ") = ", str(got), " want ", str(p.rows[i - 1])));
        const std::size_t steps = p.ragged ? p.rows[i - 1].size() : w - 1;
        const std::size_t reads = p.ragged ? p.rows[i - 1].size() + 1 : w;
        if (counters.fore_steps != steps || counters.symbol_reads != reads)
            f.push_back(cat("extract(", i, ") used ", counters.fore_steps, " fore steps and ", counters.symbol_reads,
                            " reads, want ", steps, " and ", reads));
        if (f.size() >= 20)
            break;
    }
    if (extract_all(ix.retrieval(), Execution::parallel) != p.rows)
        f.push_back("parallel extract_all differs from the panel");
    if (ix.retrieval().col1_starts().size() > 2 * build_pbwt(p).r_tilde)
        f.push_back("column-1 start list longer than 2r~");
    return f;
}

SelftestReport run_selftest(std::uint64_t seed, std::size_t panels, std::ostream* log)
{
    SelftestReport rep;
    Rng rng(seed);
    auto record = [&](const char* what, std::size_t panel, Failures fs, const Panel* p) {
        ++rep.checks;
        for (auto& msg : fs) {
            std::string line = cat("panel ", panel, " ", what, ": ", msg);
            if (p)
                line += " | " + describe(*p);
            if (log)
                *log << "FAIL " << line << '\n';
            rep.failures.push_back(std::move(line));
        }
    };
    for (std::size_t k = 0; k < panels; ++k) {
        PanelShape shape{.max_h = 16, .max_w = 16, .max_sigma = 4, .ragged = k % 4 == 3};
        const Panel p = random_panel(rng, shape);
        const symbol_t sigma = validate_panel(p).sigma;
        const auto pats = sample_patterns(rng, p, shape.max_w + 1, sigma, 24);

        const row_t n = static_cast<row_t>(std::uniform_int_distribution<row_t>(1, 60)(rng));
        record("normalize", k, check_normalize(random_partition(rng, n), random_partition(rng, n)), nullptr);
        record("pbwt", k, check_pbwt(p), &p);
        record("subruns", k, check_subruns(p), &p);
        record("stepping", k, check_stepping(p), &p);
        if (!p.ragged)
            record("bounds", k, check_bounds(p), &p);
        record("prefix", k, check_prefix(p, pats), &p);
        record("sorted", k, check_sorted(p, pats), &p);
        record("retrieval", k, check_retrieval(p), &p);
        ++rep.panels;
    }
    if (log)
        *log << "selftest seed=" << seed << " panels=" << rep.panels << " checks=" << rep.checks
             << " failures=" << rep.failures.size() << '\n';
    return rep;
}

std::string describe(const Panel& p)
{
    std::string s = p.ragged ? "ragged{" : "{";
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        if (i)
            s += ',';
        s += str(p.rows[i]);
    }
    return s + "}";
}

} // namespace rlpbwt::reference
