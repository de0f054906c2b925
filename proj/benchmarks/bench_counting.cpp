#include <benchmark/benchmark.h>

#include "teuler/counting.hpp"
#include "teuler/generators.hpp"

using namespace teuler;

static void BM_CountToursCycle(benchmark::State& state) {
  Hypergraph h = gen_tight_cycle(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_euler_tours(h, {1, false}));
  }
}
BENCHMARK(BM_CountToursCycle)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_CountTrailsCycle(benchmark::State& state) {
  Hypergraph h = gen_tight_cycle(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_euler_trails(h, {1, false}));
  }
}
BENCHMARK(BM_CountTrailsCycle)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_CountToursThreads(benchmark::State& state) {
  Hypergraph h = gen_random(8, 3, 12, 7);
  int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_euler_tours(h, {threads, false}));
  }
}
BENCHMARK(BM_CountToursThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_WalkCountTable(benchmark::State& state) {
  Hypergraph h = gen_tight_cycle(static_cast<int>(state.range(0)), 3);
  Prefix start{0, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(walk_counts(h, start, h.m()));
  }
}
BENCHMARK(BM_WalkCountTable)->Arg(10)->Arg(20)->Arg(30);

BENCHMARK_MAIN();
