// Serial references against the OpenMP kernels. The thread count is the
// benchmark argument for the parallel variants.

#include "tww/decomposition.hpp"
#include "tww/generators.hpp"
#include "tww/kernels.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

#include <memory>
#include <random>
#include <set>

using namespace tww;

namespace {

ContractionState half_contracted(const Graph& g)
{
    ContractionState st(g);
    std::mt19937_64 rng(1);
    while (st.order() > g.n() / 2) {
        auto live = st.live().members();
        std::size_t i = rng() % live.size(), j = rng() % live.size();
        if (i != j)
            st.contract(live[i], live[j]);
    }
    return st;
}

std::vector<VertexSet> tree_sides(const Graph& g)
{
    ContractionSequence s(g.n());
    std::vector<int> live;
    for (int v = 1; v <= g.n(); ++v)
        live.push_back(v);
    std::mt19937_64 rng(2);
    while (live.size() > 1) {
        std::size_t i = rng() % live.size(), j = rng() % live.size();
        if (i == j)
            continue;
        int u = live[i], v = live[j];
        live.erase(live.begin() + static_cast<long>(std::max(i, j)));
        live.erase(live.begin() + static_cast<long>(std::min(i, j)));
        live.push_back(s.push(u, v));
    }
    return BranchDecomposition::merge_tree(s).cut_sides();
}

FusionPlan fusion_plan(int inputs, int per_input)
{
    std::mt19937_64 rng(3);
    FusionPlan plan;
    int part = 1;
    for (int j = 0; j < inputs; ++j) {
        auto in = std::make_shared<ProfileSet>();
        in->parts = {part++, part++};
        std::set<std::vector<ColorMask>> distinct;
        while (static_cast<int>(distinct.size()) < per_input)
            distinct.insert({1 + static_cast<ColorMask>(rng() % 15), 1 + static_cast<ColorMask>(rng() % 15)});
        in->profiles.assign(distinct.begin(), distinct.end());
        plan.inputs.push_back(in);
        for (int k = 0; k < 2; ++k) {
            plan.parts.push_back(static_cast<int>(plan.parts.size()) + 1);
            plan.sources.push_back({{j, k}});
        }
    }
    plan.sources[0].push_back({1, 0});
    plan.conflicts.push_back({{2, 0}, {3, 1}});
    return plan;
}

const Graph& scoring_graph()
{
    static const Graph g = gen::erdos_renyi(70, 0.3, 7);
    return g;
}

const Graph& cut_graph()
{
    static const Graph g = gen::erdos_renyi(40, 0.25, 9);
    return g;
}

void BM_ScorePairsSerial(benchmark::State& state)
{
    auto st = half_contracted(scoring_graph());
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::serial::score_pairs(st, Measure::degree));
}

void BM_ScorePairsParallel(benchmark::State& state)
{
    omp_set_num_threads(static_cast<int>(state.range(0)));
    auto st = half_contracted(scoring_graph());
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::score_pairs(st, Measure::degree));
}

void BM_CutProfilesSerial(benchmark::State& state)
{
    auto sides = tree_sides(cut_graph());
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::serial::cut_profiles(cut_graph(), sides, 1 << 14));
}

void BM_CutProfilesParallel(benchmark::State& state)
{
    omp_set_num_threads(static_cast<int>(state.range(0)));
    auto sides = tree_sides(cut_graph());
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::cut_profiles(cut_graph(), sides, 1 << 14));
}

void BM_FuseProfilesSerial(benchmark::State& state)
{
    auto plan = fusion_plan(4, 16);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::serial::fuse_profiles(plan));
}

void BM_FuseProfilesParallel(benchmark::State& state)
{
    omp_set_num_threads(static_cast<int>(state.range(0)));
    auto plan = fusion_plan(4, 16);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::fuse_profiles(plan));
}

} // namespace

BENCHMARK(BM_ScorePairsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScorePairsParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CutProfilesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CutProfilesParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FuseProfilesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FuseProfilesParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
