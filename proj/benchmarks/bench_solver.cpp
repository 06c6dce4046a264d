#include "eck/exact.hpp"
#include "eck/extension.hpp"
#include "eck/generators.hpp"
#include "eck/graph.hpp"
#include "eck/solver.hpp"

#include <benchmark/benchmark.h>

#include <numeric>

namespace {

void BM_decompose(benchmark::State& state) {
    eck::Graph g = eck::gen_few_max_degree(2, 3, static_cast<int>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(eck::decompose(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_decompose)->RangeMultiplier(10)->Range(1000, 100000)->Complexity(benchmark::oN);

void BM_kernel_solve(benchmark::State& state) {
    // Kernel work depends on (p, k), not on n.
    eck::Graph g = eck::gen_few_max_degree(static_cast<int>(state.range(0)), 4, 2000, 42);
    auto dec = eck::decompose(g);
    for (auto _ : state) benchmark::DoNotOptimize(eck::solve_exact(dec.semi_core.graph, 4));
}
BENCHMARK(BM_kernel_solve)->DenseRange(1, 4);

void BM_extend_from_scratch(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    eck::Graph g = eck::gen_few_max_degree(2, 3, n, 42);
    eck::SemiCoreDecomposition dec;
    dec.semi_core.graph = eck::Graph(0, {});
    dec.excluded_order.resize(static_cast<std::size_t>(n));
    std::iota(dec.excluded_order.begin(), dec.excluded_order.end(), 0);
    for (auto _ : state) {
        eck::PartialEdgeColouring empty(dec.semi_core.graph, 4);
        benchmark::DoNotOptimize(eck::extend(g, dec, empty, 4));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_extend_from_scratch)->RangeMultiplier(10)->Range(1000, 100000)->Complexity(benchmark::oN);

void BM_solve_end_to_end(benchmark::State& state) {
    eck::Graph g = eck::gen_few_max_degree(2, 3, static_cast<int>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(eck::solve(g, 3));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_solve_end_to_end)->RangeMultiplier(10)->Range(1000, 100000)->Complexity(benchmark::oN);

void BM_chromatic_index_petersen(benchmark::State& state) {
    eck::Graph g = eck::gen_petersen();
    for (auto _ : state) benchmark::DoNotOptimize(eck::chromatic_index(g));
}
BENCHMARK(BM_chromatic_index_petersen);

}  // namespace

BENCHMARK_MAIN();
