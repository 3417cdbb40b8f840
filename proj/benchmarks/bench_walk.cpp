#include <benchmark/benchmark.h>

#include <padicqm/ctqw.hpp>

using namespace padicqm;

static void BM_InfiniteGraphColumn(benchmark::State& state) {
  const PrimeParams params(3);
  const int v = static_cast<int>(state.range(0));
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(transition_matrix_K_infinity(v, t, v + 6, params));
    t += 1e-3;
  }
}
BENCHMARK(BM_InfiniteGraphColumn)->Arg(0)->Arg(3)->Arg(8);

static void BM_FiniteGraphColumn(benchmark::State& state) {
  const PrimeParams params(5);
  const int R0 = static_cast<int>(state.range(0));
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(transition_probs_K_R0(Region::ball(R0), t, R0, params));
    t += 1e-3;
  }
}
BENCHMARK(BM_FiniteGraphColumn)->Arg(3)->Arg(6);

static void BM_BornOracle(benchmark::State& state) {
  const PrimeParams params(3);
  const int v = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(born_oracle_probability(Region::sphere(v + 1), Region::sphere(v), 0.7, params));
  }
}
BENCHMARK(BM_BornOracle)->Arg(1)->Arg(3)->Unit(benchmark::kMicrosecond);

static void BM_CompleteGraphDense(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(farhi_gutmann_dense(n, 1.0, 0.9));
}
BENCHMARK(BM_CompleteGraphDense)->Arg(4)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
