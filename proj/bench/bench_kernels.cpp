// Parallel kernels against their serial references.
//
//   ./build/bench/bench_kernels --benchmark_filter=Conflict
//
// Set OMP_NUM_THREADS to control the parallel side.

#include <benchmark/benchmark.h>

#include <random>

#include "cfreduce/conflict_graph.hpp"
#include "cfreduce/core.hpp"

using namespace cfreduce;

namespace {

PlantedInstance instance(std::size_t m, Color k) {
    return generate_planted({4 * m, m, k, 0.5, 42});
}

PartialColoring random_partial(std::size_t n, Color k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Color> pick(0, k);
    PartialColoring f(n, k);
    for (VertexId v = 1; v <= n; ++v) {
        Color c = pick(rng);
        if (c) f.assign(v, c);
    }
    return f;
}

void BM_ConflictGraphParallel(benchmark::State& state) {
    auto inst = instance(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_conflict_graph(inst.hypergraph, 4));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(inst.hypergraph.total_incidences() * 4));
}

void BM_ConflictGraphSerial(benchmark::State& state) {
    auto inst = instance(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_conflict_graph_serial(inst.hypergraph, 4));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(inst.hypergraph.total_incidences() * 4));
}

void BM_HappyEdgesParallel(benchmark::State& state) {
    auto inst = instance(static_cast<std::size_t>(state.range(0)), 8);
    auto f = random_partial(inst.hypergraph.num_vertices(), 8, 1);
    for (auto _ : state) benchmark::DoNotOptimize(happy_edges(inst.hypergraph, f));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_HappyEdgesSerial(benchmark::State& state) {
    auto inst = instance(static_cast<std::size_t>(state.range(0)), 8);
    auto f = random_partial(inst.hypergraph.num_vertices(), 8, 1);
    for (auto _ : state) benchmark::DoNotOptimize(happy_edges_serial(inst.hypergraph, f));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(BM_ConflictGraphParallel)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConflictGraphSerial)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HappyEdgesParallel)->RangeMultiplier(8)->Range(64, 32768);
BENCHMARK(BM_HappyEdgesSerial)->RangeMultiplier(8)->Range(64, 32768);

BENCHMARK_MAIN();
