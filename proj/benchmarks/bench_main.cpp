#include <benchmark/benchmark.h>

#include "altkg/alternation.hpp"
#include "altkg/box_complex.hpp"
#include "altkg/coloring.hpp"
#include "altkg/gale.hpp"
#include "altkg/kneser.hpp"
#include "altkg/representations.hpp"
#include "altkg/signed_property.hpp"
#include "altkg/subsets.hpp"

using namespace altkg;

namespace {

Hypergraph stable_pairs(int n) {
    std::vector<int> vs;
    for (int v = 1; v <= n; ++v) vs.push_back(v);
    return Hypergraph(vs, stable_k_subsets(n, 2, 2));
}

void BM_AltExhaustiveInterleavedSG62(benchmark::State& state) {
    auto rep = schrijver_interleaved_representation(6, SchrijverOrderVariant::TWO_SUBSETS_EVEN);
    AltOptions opts;
    opts.mode = SearchMode::EXHAUSTIVE;
    for (auto _ : state)
        benchmark::DoNotOptimize(alt_sigma(rep.hypergraph, rep.order, opts).value);
}
BENCHMARK(BM_AltExhaustiveInterleavedSG62)->Unit(benchmark::kMillisecond);

void BM_AltBranchBoundInterleavedSG82(benchmark::State& state) {
    auto rep = schrijver_interleaved_representation(8, SchrijverOrderVariant::TWO_SUBSETS_EVEN);
    for (auto _ : state)
        benchmark::DoNotOptimize(alt_sigma(rep.hypergraph, rep.order).value);
}
BENCHMARK(BM_AltBranchBoundInterleavedSG82)->Unit(benchmark::kMillisecond);

void BM_SaltExhaustiveStablePairs(benchmark::State& state) {
    Hypergraph h = stable_pairs(int(state.range(0)));
    LinearOrder o = LinearOrder::natural(h);
    AltOptions opts;
    opts.mode = SearchMode::EXHAUSTIVE;
    for (auto _ : state) benchmark::DoNotOptimize(salt_sigma(h, o, opts).value);
}
BENCHMARK(BM_SaltExhaustiveStablePairs)->Arg(7)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_ChromaticKneser(benchmark::State& state) {
    Graph g = kneser(int(state.range(0)), int(state.range(1))).graph;
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g).lower);
}
BENCHMARK(BM_ChromaticKneser)->Args({7, 2})->Args({8, 3})->Unit(benchmark::kMillisecond);

void BM_ChromaticSchrijver(benchmark::State& state) {
    Graph g = stable_kneser(int(state.range(0)), 2, 2).graph;
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g).lower);
}
BENCHMARK(BM_ChromaticSchrijver)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_GaleSampling(benchmark::State& state) {
    int n = int(state.range(0));
    Hypergraph h = stable_pairs(n);
    auto cfg = gale_points(n, n - 4, LinearOrder::natural(h));
    auto prop = plus_side_edge_property(h);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_gale(cfg, *prop, 10000, 42).failures);
}
BENCHMARK(BM_GaleSampling)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_MomentHyperplanes(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_moment_hyperplanes(20, 12, 1000, 42).failures);
}
BENCHMARK(BM_MomentHyperplanes)->Unit(benchmark::kMillisecond);

void BM_BoxComplexPetersen(benchmark::State& state) {
    Graph g = kneser(5, 2).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(box_complex(g, BoxComplexVariant::B).facets().size());
}
BENCHMARK(BM_BoxComplexPetersen)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
