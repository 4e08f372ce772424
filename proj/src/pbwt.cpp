#include "rlpbwt/pbwt.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rlpbwt {

namespace {

// Bucket offsets for a stable distribution of one column by symbol. Uses a
// dense array when the alphabet is small relative to the column, otherwise
// the sorted distinct symbols.
class SymbolBuckets {
public:
    SymbolBuckets(std::span<const symbol_t> column, bool skip_terminator)
    {
        symbol_t max_sym = 0;
        for (symbol_t s : column)
            max_sym = std::max(max_sym, s);
        dense_ = max_sym <= 4 * column.size() + 64;
        if (dense_) {
            offsets_.assign(static_cast<std::size_t>(max_sym) + 2, 0);
            for (symbol_t s : column)
                ++offsets_[s + 1];
        } else {
            distinct_.assign(column.begin(), column.end());
            std::sort(distinct_.begin(), distinct_.end());
            distinct_.erase(std::unique(distinct_.begin(), distinct_.end()), distinct_.end());
            offsets_.assign(distinct_.size() + 1, 0);
            for (symbol_t s : column)
                ++offsets_[slot(s) + 1];
        }
        if (skip_terminator && !offsets_.empty() && has_slot(kTerminator))
            offsets_[slot(kTerminator) + 1] = 0;
        std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    }

    // First (0-based) target position of symbol s.
    std::size_t& cursor(symbol_t s) { return offsets_[slot(s)]; }

private:
    bool has_slot(symbol_t s) const
    {
        if (dense_)
            return s + 1 < offsets_.size();
        return std::binary_search(distinct_.begin(), distinct_.end(), s);
    }
    std::size_t slot(symbol_t s) const
    {
        if (dense_)
            return s;
        return static_cast<std::size_t>(std::lower_bound(distinct_.begin(), distinct_.end(), s) - distinct_.begin());
    }

    bool dense_ = true;
    std::vector<std::size_t> offsets_;
    std::vector<symbol_t> distinct_;
};

void check_column(const PbwtColumns& pc, std::size_t j)
{
    if (j < 1 || j > pc.width())
        throw std::out_of_range("column " + std::to_string(j) + " outside [1," + std::to_string(pc.width()) + "]");
}

} // namespace

IntervalList extract_runs(std::span<const symbol_t> column)
{
    std::vector<Interval> runs;
    for (std::size_t i = 0; i < column.size(); ++i) {
        if (i == 0 || column[i] != column[i - 1])
            runs.push_back({static_cast<row_t>(i + 1), static_cast<row_t>(i + 1)});
        else
            runs.back().e = static_cast<row_t>(i + 1);
    }
    return {std::move(runs), static_cast<row_t>(column.size())};
}

PbwtColumns build_pbwt(const Panel& p)
{
    const PanelReport rep = validate_panel(p);
    PbwtColumns pc;
    pc.h = rep.h;
    pc.terminator_mode = p.ragged;
    pc.sigma = p.ragged ? rep.sigma + 1 : rep.sigma;
    const std::size_t w = p.ragged ? rep.w + 1 : rep.w;

    auto symbol_of = [&](row_t id, std::size_t j) -> symbol_t {
        const auto& row = p.rows[id - 1];
        if (!p.ragged)
            return row[j - 1];
        return j <= row.size() ? row[j - 1] + 1 : kTerminator;
    };

    std::vector<row_t> order(rep.h);
    std::iota(order.begin(), order.end(), row_t{1});

    pc.pbwt.reserve(w);
    pc.pa.reserve(w);
    pc.runs.reserve(w);
    for (std::size_t j = 1; j <= w; ++j) {
        std::vector<symbol_t> col(order.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            col[i] = symbol_of(order[i], j);

        if (j < w) {
            SymbolBuckets buckets(col, p.ragged);
            std::size_t alive = order.size();
            if (p.ragged)
                alive -= static_cast<std::size_t>(std::count(col.begin(), col.end(), kTerminator));
            std::vector<row_t> next(alive);
            for (std::size_t i = 0; i < order.size(); ++i) {
                if (p.ragged && col[i] == kTerminator)
                    continue;
                next[buckets.cursor(col[i])++] = order[i];
            }
            pc.pa.push_back(std::exchange(order, std::move(next)));
        } else {
            pc.pa.push_back(order);
        }
        pc.runs.push_back(extract_runs(col));
        pc.r_tilde += pc.runs.back().size();
        pc.pbwt.push_back(std::move(col));
    }
    return pc;
}

std::vector<row_t> fore_table(std::span<const symbol_t> column, bool terminator_mode)
{
    SymbolBuckets buckets(column, terminator_mode);
    std::vector<row_t> fore(column.size(), 0);
    for (std::size_t i = 0; i < column.size(); ++i) {
        if (terminator_mode && column[i] == kTerminator)
            continue;
        fore[i] = static_cast<row_t>(++buckets.cursor(column[i]));
    }
    return fore;
}

std::vector<row_t> back_table(std::span<const symbol_t> column, bool terminator_mode)
{
    const auto fore = fore_table(column, terminator_mode);
    std::size_t alive = 0;
    for (row_t f : fore)
        alive += f != 0;
    std::vector<row_t> back(alive, 0);
    for (std::size_t i = 0; i < fore.size(); ++i) {
        if (fore[i] != 0)
            back[fore[i] - 1] = static_cast<row_t>(i + 1);
    }
    return back;
}

row_t naive_fore(const PbwtColumns& pc, row_t i, std::size_t j)
{
    check_column(pc, j);
    if (j == pc.width())
        throw std::out_of_range("fore is undefined at the last column");
    const auto col = pc.column(j);
    if (i < 1 || i > col.size())
        throw std::out_of_range("row " + std::to_string(i) + " outside column " + std::to_string(j));
    const symbol_t c = col[i - 1];
    if (pc.terminator_mode && c == kTerminator)
        throw std::invalid_argument("fore is undefined on a terminator row");

    std::size_t smaller = 0;
    std::size_t rank = 0;
    for (std::size_t k = 0; k < col.size(); ++k) {
        if (pc.terminator_mode && col[k] == kTerminator)
            continue;
        if (col[k] < c)
            ++smaller;
        else if (col[k] == c && k < i)
            ++rank;
    }
    return static_cast<row_t>(smaller + rank);
}

row_t naive_back(const PbwtColumns& pc, row_t i, std::size_t j)
{
    check_column(pc, j);
    if (j == 1)
        throw std::out_of_range("back is undefined at the first column");
    if (i < 1 || i > pc.column_size(j))
        throw std::out_of_range("row " + std::to_string(i) + " outside column " + std::to_string(j));
    const auto prev = pc.column(j - 1);
    // Find the symbol class c with C_c < i <= C_c + count_c, then select_c.
    std::vector<symbol_t> present;
    for (symbol_t s : prev) {
        if (!(pc.terminator_mode && s == kTerminator))
            present.push_back(s);
    }
    std::sort(present.begin(), present.end());
    if (i > present.size())
        throw std::out_of_range("row outside column");
    const symbol_t c = present[i - 1];
    const std::size_t smaller =
        static_cast<std::size_t>(std::lower_bound(present.begin(), present.end(), c) - present.begin());
    std::size_t want = i - smaller;
    for (std::size_t k = 0; k < prev.size(); ++k) {
        if (prev[k] == c && --want == 0)
            return static_cast<row_t>(k + 1);
    }
    throw std::logic_error("back: no preimage");
}

} // namespace rlpbwt
