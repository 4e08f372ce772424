// Serial versus OpenMP kernels on a synthetic low-diversity panel.
#include "rlpbwt/kernels.hpp"
#include "rlpbwt/panel_index.hpp"
#include "rlpbwt/reference.hpp"
#include "rlpbwt/subruns.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace rlpbwt;

// Founder mosaic: each row copies a few founders with rare mutations, which
// keeps r~ small relative to h*w like real haplotype panels.
Panel mosaic_panel(std::size_t h, std::size_t w, std::uint64_t seed)
{
    reference::Rng rng(seed);
    std::vector<Haplotype> founders(16, Haplotype(w));
    for (auto& f : founders)
        for (auto& s : f)
            s = static_cast<symbol_t>(rng() & 1);
    Panel p;
    std::uniform_int_distribution<std::size_t> pick(0, founders.size() - 1);
    std::bernoulli_distribution sw(0.01), mut(0.001);
    for (std::size_t i = 0; i < h; ++i) {
        Haplotype row(w);
        std::size_t f = pick(rng);
        for (std::size_t j = 0; j < w; ++j) {
            if (sw(rng))
                f = pick(rng);
            row[j] = founders[f][j] ^ static_cast<symbol_t>(mut(rng));
        }
        p.rows.push_back(std::move(row));
    }
    return p;
}

struct Fixture {
    Panel panel = mosaic_panel(2000, 400, 7);
    PbwtColumns pc = build_pbwt(panel);
    SubRunLists sr = build_subruns(pc);
    PanelIndex ix = PanelIndex::build(panel, {.sorted = false, .with_back = true, .exec = Execution::parallel});
    std::vector<Haplotype> patterns = [this] {
        reference::Rng rng(11);
        return reference::sample_patterns(rng, panel, 400, 2, 4000);
    }();
};

const Fixture& fixture()
{
    static const Fixture f;
    return f;
}

Execution mode(const benchmark::State& st)
{
    return st.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_BuildStepIndex(benchmark::State& st)
{
    const auto& f = fixture();
    for (auto _ : st)
        benchmark::DoNotOptimize(build_step_index(f.pc, f.sr, mode(st)));
    st.counters["r_tilde"] = static_cast<double>(f.pc.r_tilde);
}

void BM_ExtractAll(benchmark::State& st)
{
    const auto& f = fixture();
    for (auto _ : st)
        benchmark::DoNotOptimize(extract_all(f.ix.retrieval(), mode(st)));
    st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * f.panel.height()));
}

void BM_PrefixBatch(benchmark::State& st)
{
    const auto& f = fixture();
    for (auto _ : st)
        benchmark::DoNotOptimize(prefix_search_batch(f.ix.prefix_index(), f.patterns, mode(st)));
    st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * f.patterns.size()));
}

void BM_ForeStepAll(benchmark::State& st)
{
    const auto& f = fixture();
    for (auto _ : st)
        benchmark::DoNotOptimize(fore_step_all(f.ix.steps(), mode(st)));
}

} // namespace

BENCHMARK(BM_BuildStepIndex)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtractAll)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrefixBatch)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ForeStepAll)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
