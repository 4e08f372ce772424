#include "rlpbwt/bounds.hpp"

#include "rlpbwt/errors.hpp"
#include "rlpbwt/prefix_search.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <numeric>
#include <sstream>

namespace rlpbwt {
namespace {

/// Dense class id per row: equal rows share an id.
std::vector<std::uint32_t> row_classes(const Panel& p)
{
    std::map<Haplotype, std::uint32_t> ids;
    std::vector<std::uint32_t> cls(p.rows.size());
    for (std::size_t i = 0; i < p.rows.size(); ++i)
        cls[i] = ids.try_emplace(p.rows[i], static_cast<std::uint32_t>(ids.size())).first->second;
    return cls;
}

IntervalList blocks_under(std::span<const row_t> pa, const std::vector<std::uint32_t>& cls)
{
    std::vector<row_t> starts;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        if (i == 0 || cls[pa[i] - 1] != cls[pa[i - 1] - 1])
            starts.push_back(static_cast<row_t>(i + 1));
    }
    return IntervalList::from_starts(starts, static_cast<row_t>(pa.size()));
}

std::string join(const std::vector<std::size_t>& v)
{
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k)
            s += ',';
        s += std::to_string(v[k]);
    }
    return s;
}

void require_fixed(const Panel& p)
{
    if (validate_panel(p).ragged)
        throw validation_error("bounds are defined for fixed-length panels only");
}

} // namespace

std::size_t compute_h_pp(const Panel& p)
{
    std::size_t count = 0;
    for (std::size_t i = 1; i < p.rows.size(); ++i)
        count += p.rows[i] != p.rows[i - 1];
    return count;
}

IntervalList canonical_intervals(const PbwtColumns& pc, const Panel& p, std::size_t j)
{
    return blocks_under(pc.pa_column(j), row_classes(p));
}

bool BoundsReport::all_pass() const noexcept
{
    return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.pass; });
}

void check_bounds(BoundsReport& r)
{
    r.checks.clear();
    auto add = [&](std::string name, bool pass, std::string detail) {
        r.checks.push_back({std::move(name), pass, std::move(detail)});
    };
    const std::size_t hp1 = r.h_pp + 1;
    add("r_tilde_ge_h_pp_plus_1", r.r_tilde >= hp1, std::to_string(r.r_tilde) + " >= " + std::to_string(hp1));
    add("r_tilde_ge_distinct", r.r_tilde >= r.distinct,
        std::to_string(r.r_tilde) + " >= " + std::to_string(r.distinct));

    auto first_bad = [&](auto pred) -> std::string {
        for (std::size_t j = 0; j < r.w; ++j)
            if (!pred(j))
                return "column " + std::to_string(j + 1);
        return {};
    };
    const bool cols_ok = r.r_per_col.size() == r.w && r.ell_per_col.size() == r.w;
    std::string bad = cols_ok ? first_bad([&](std::size_t j) { return r.r_per_col[j] <= r.ell_per_col[j]; })
                              : "column count mismatch";
    add("r_j_le_ell_j", bad.empty(), bad.empty() ? "all columns" : bad);
    bad = cols_ok ? first_bad([&](std::size_t j) { return r.ell_per_col[j] <= hp1; }) : "column count mismatch";
    add("ell_j_le_h_pp_plus_1", bad.empty(), bad.empty() ? "all columns" : bad);
    add("r_tilde_le_w_times_h_pp_plus_1", r.r_tilde <= r.w * hp1,
        std::to_string(r.r_tilde) + " <= " + std::to_string(r.w * hp1));
    bad = cols_ok ? first_bad([&](std::size_t j) { return j == 0 || r.ell_per_col[j] <= r.ell_per_col[j - 1]; })
                  : "column count mismatch";
    add("ell_monotone", bad.empty(), bad.empty() ? "all columns" : bad);
}

BoundsReport compute_bounds(const Panel& p, Execution exec)
{
    require_fixed(p);
    const PbwtColumns pc = build_pbwt(p);
    const auto cls = row_classes(p);

    BoundsReport r;
    r.h = p.height();
    r.w = pc.width();
    r.h_pp = compute_h_pp(p);
    r.distinct = count_distinct_rows(p);
    r.r_tilde = pc.r_tilde;
    r.r_per_col.resize(r.w);
    r.ell_per_col.resize(r.w);
    for (std::size_t j = 1; j <= r.w; ++j)
        r.r_per_col[j - 1] = pc.runs_of(j).size();

    const auto w = static_cast<std::ptrdiff_t>(r.w);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8) if (exec == Execution::parallel)
    for (std::ptrdiff_t j = 0; j < w; ++j) {
        try {
            r.ell_per_col[j] = blocks_under(pc.pa_column(j + 1), cls).size();
        } catch (...) {
#pragma omp critical(rlpbwt_bounds_error)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    Panel sorted;
    for (row_t id : lexicographic_order(p))
        sorted.rows.push_back(p.rows[id - 1]);
    r.h_pp_sorted = compute_h_pp(sorted);

    check_bounds(r);
    return r;
}

std::string format_report(const BoundsReport& r)
{
    std::ostringstream os;
    os << "h=" << r.h << '\n'
       << "w=" << r.w << '\n'
       << "h_pp=" << r.h_pp << '\n'
       << "h_pp_sorted=" << r.h_pp_sorted << '\n'
       << "distinct=" << r.distinct << '\n'
       << "r_tilde=" << r.r_tilde << '\n'
       << "r_per_col=" << join(r.r_per_col) << '\n'
       << "ell_per_col=" << join(r.ell_per_col) << '\n';
    for (const auto& c : r.checks)
        os << "check." << c.name << '=' << (c.pass ? "pass" : "FAIL") << " (" << c.detail << ")\n";
    os << "all_pass=" << (r.all_pass() ? "true" : "false") << '\n';
    return os.str();
}

std::string format_report_csv(const BoundsReport& r)
{
    std::ostringstream os;
    os << "column,r_j,ell_j\n";
    for (std::size_t j = 0; j < r.w; ++j)
        os << j + 1 << ',' << r.r_per_col.at(j) << ',' << r.ell_per_col.at(j) << '\n';
    return os.str();
}

} // namespace rlpbwt
