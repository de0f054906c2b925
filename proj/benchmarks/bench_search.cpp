#include <benchmark/benchmark.h>

#include "teuler/generators.hpp"
#include "teuler/reduction.hpp"
#include "teuler/search.hpp"

using namespace teuler;

static void BM_EnumerateToursHell(benchmark::State& state) {
  Hypergraph h = gen_h_ell(static_cast<int>(state.range(0))).graph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_euler_tours(h));
  }
}
BENCHMARK(BM_EnumerateToursHell)->Arg(5)->Arg(9)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_EnumerateTrailsComplete53(benchmark::State& state) {
  Hypergraph h = gen_complete(5, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_euler_trails(h));
  }
}
BENCHMARK(BM_EnumerateTrailsComplete53)->Unit(benchmark::kMillisecond);

static void BM_ForcedWalkTypeT(benchmark::State& state) {
  Hypergraph h = gen_h_ell(static_cast<int>(state.range(0))).graph;
  WalkSeq seed{{0, static_cast<int>(state.range(0)), 1}, false};
  for (auto _ : state) {
    benchmark::DoNotOptimize(forced_walk(h, seed));
  }
}
BENCHMARK(BM_ForcedWalkTypeT)->Arg(5)->Arg(20)->Arg(50);

static void BM_ReduceAndCertify(benchmark::State& state) {
  CnfFormula f = preprocess(parse_dimacs_string(
      "p cnf 4 3\n1 2 3 0\n-1 2 4 0\n-2 -3 -4 0\n"));
  Assignment w = *sat_brute_force(f);
  for (auto _ : state) {
    ReducedInstance inst = reduce(f);
    benchmark::DoNotOptimize(tour_from_assignment(f, inst.map, w));
  }
}
BENCHMARK(BM_ReduceAndCertify)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
