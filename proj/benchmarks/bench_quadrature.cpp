#include <benchmark/benchmark.h>

#include <cmath>

#include <padicqm/radial.hpp>

using namespace padicqm;

static void BM_IntegrateBallFloat(benchmark::State& state) {
  const PrimeParams params(static_cast<std::int64_t>(state.range(0)));
  auto f = sphere_indicator(1, params).as_complex();
  f.level = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(integrate_ball(f, 0, params));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(std::pow(state.range(0), state.range(1))));
}
BENCHMARK(BM_IntegrateBallFloat)->Args({3, 6})->Args({3, 9})->Args({5, 5})->Args({7, 4});

static void BM_IntegrateBallExact(benchmark::State& state) {
  const PrimeParams params(static_cast<std::int64_t>(state.range(0)));
  auto f = sphere_indicator(1, params);
  f.level = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(integrate_ball(f, 0, params));
}
BENCHMARK(BM_IntegrateBallExact)->Args({3, 6})->Args({5, 4});

static void BM_ExpandRadialSphere(benchmark::State& state) {
  const PrimeParams params(static_cast<std::int64_t>(state.range(0)));
  const int j = static_cast<int>(state.range(1));
  const auto f = sphere_indicator(j, params);
  for (auto _ : state) benchmark::DoNotOptimize(expand_radial(f, j + 1, params));
}
BENCHMARK(BM_ExpandRadialSphere)->Args({3, 4})->Args({5, 4})->Args({7, 4})->Unit(benchmark::kMillisecond);
