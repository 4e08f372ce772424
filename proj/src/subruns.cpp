#include "rlpbwt/subruns.hpp"

#include "rlpbwt/normalize.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rlpbwt {

namespace {

void require_partition(const IntervalList& list, std::size_t n, const char* what)
{
    if (list.n() != n || !list.is_partition())
        throw validation_error(std::string(what) + ": list does not partition a column of " + std::to_string(n) +
                               " rows");
}

} // namespace

MappedList fore_map_traced(std::span<const symbol_t> column, bool terminator_mode, const IntervalList& sub_runs)
{
    require_partition(sub_runs, column.size(), "fore_map");
    const auto fore = fore_table(column, terminator_mode);

    // Run end of every position, to reject intervals crossing a run boundary.
    std::vector<row_t> run_end(column.size());
    for (std::size_t i = column.size(); i-- > 0;) {
        const bool last = i + 1 == column.size() || column[i + 1] != column[i];
        run_end[i] = last ? static_cast<row_t>(i + 1) : run_end[i + 1];
    }

    std::vector<std::uint32_t> order;
    order.reserve(sub_runs.size());
    for (std::uint32_t k = 0; k < sub_runs.size(); ++k) {
        const Interval iv = sub_runs[k];
        if (run_end[iv.b - 1] < iv.e)
            throw validation_error("fore_map: interval " + to_string(iv) + " spans a run boundary");
        if (terminator_mode && column[iv.b - 1] == kTerminator)
            continue;
        order.push_back(k);
    }
    // Within a symbol class fore is increasing, and classes are laid out by
    // symbol, so a stable sort by symbol yields left-endpoint order.
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return column[sub_runs[a].b - 1] < column[sub_runs[b].b - 1];
    });

    MappedList out;
    std::vector<Interval> items;
    items.reserve(order.size());
    out.source.reserve(order.size());
    for (std::uint32_t k : order) {
        const Interval iv = sub_runs[k];
        items.push_back({fore[iv.b - 1], fore[iv.e - 1]});
        out.source.push_back(k + 1);
    }
    const row_t n = items.empty() ? 0 : items.back().e;
    out.list = IntervalList(std::move(items), n);
    return out;
}

MappedList back_map_traced(std::span<const symbol_t> column, bool terminator_mode, const IntervalList& list)
{
    const auto back = back_table(column, terminator_mode);
    require_partition(list, back.size(), "back_map");

    struct Entry {
        Interval iv;
        std::uint32_t source;
    };
    std::vector<Entry> entries;
    entries.reserve(list.size());
    for (std::uint32_t k = 0; k < list.size(); ++k) {
        const Interval iv = list[k];
        for (row_t i = iv.b; i < iv.e; ++i) {
            if (back[i] != back[i - 1] + 1)
                throw validation_error("back_map: image of " + to_string(iv) + " is not contiguous");
        }
        entries.push_back({{back[iv.b - 1], back[iv.e - 1]}, k + 1});
    }
    if (terminator_mode) {
        for (const Interval& run : extract_runs(column)) {
            if (column[run.b - 1] == kTerminator)
                entries.push_back({run, 0});
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.iv.b < b.iv.b; });

    MappedList out;
    std::vector<Interval> items;
    items.reserve(entries.size());
    out.source.reserve(entries.size());
    for (const auto& e : entries) {
        items.push_back(e.iv);
        out.source.push_back(e.source);
    }
    out.list = IntervalList(std::move(items), static_cast<row_t>(column.size()));
    return out;
}

IntervalList fore_map(const PbwtColumns& pc, std::size_t j, const IntervalList& sub_runs)
{
    if (j < 1 || j >= pc.width())
        throw std::out_of_range("fore_map: column " + std::to_string(j) + " outside [1," +
                                std::to_string(pc.width()) + ")");
    return fore_map_traced(pc.column(j), pc.terminator_mode, sub_runs).list;
}

IntervalList back_map(const PbwtColumns& pc, std::size_t j, const IntervalList& list)
{
    if (j <= 1 || j > pc.width())
        throw std::out_of_range("back_map: column " + std::to_string(j) + " outside (1," +
                                std::to_string(pc.width()) + "]");
    return back_map_traced(pc.column(j - 1), pc.terminator_mode, list).list;
}

std::vector<IntervalList> build_subib(const PbwtColumns& pc)
{
    std::vector<IntervalList> subib;
    subib.reserve(pc.width());
    subib.push_back(pc.runs_of(1));
    for (std::size_t j = 2; j <= pc.width(); ++j) {
        const IntervalList mapped = fore_map(pc, j - 1, subib.back());
        subib.push_back(normalize(pc.runs_of(j), mapped).intervals);
    }
    return subib;
}

std::vector<IntervalList> build_subif(const PbwtColumns& pc)
{
    const std::size_t w = pc.width();
    std::vector<IntervalList> subif(w);
    subif[w - 1] = pc.runs_of(w);
    for (std::size_t j = w - 1; j >= 1; --j) {
        const IntervalList mapped_runs = fore_map(pc, j, pc.runs_of(j));
        const Normalized refined = normalize(mapped_runs, subif[j]);
        subif[j - 1] = back_map(pc, j + 1, refined.intervals);
    }
    return subif;
}

std::size_t SubRunLists::total_ib() const noexcept
{
    return std::accumulate(subib.begin(), subib.end(), std::size_t{0},
                           [](std::size_t acc, const IntervalList& l) { return acc + l.size(); });
}

std::size_t SubRunLists::total_if() const noexcept
{
    return std::accumulate(subif.begin(), subif.end(), std::size_t{0},
                           [](std::size_t acc, const IntervalList& l) { return acc + l.size(); });
}

SubRunLists build_subruns(const PbwtColumns& pc, bool with_back)
{
    SubRunLists out;
    if (with_back)
        out.subib = build_subib(pc);
    out.subif = build_subif(pc);
    return out;
}

} // namespace rlpbwt
