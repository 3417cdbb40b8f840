#include <benchmark/benchmark.h>

#include <padicqm/wavelet.hpp>

using namespace padicqm;

static void BM_IntegralOperatorOnWavelet(benchmark::State& state) {
  const PrimeParams params(static_cast<std::int64_t>(state.range(0)));
  const int r = -static_cast<int>(state.range(1));
  const auto f = wavelet_fn(WaveletIndex::centered(r, {1}), params);
  const Rational x = prime_power(params.p(), -r);
  for (auto _ : state) benchmark::DoNotOptimize(tv_apply_integral(f, x, params, -r));
}
BENCHMARK(BM_IntegralOperatorOnWavelet)->Args({3, 0})->Args({3, 2})->Args({5, 2})->Args({7, 2});

static void BM_CosineIntegralExact(benchmark::State& state) {
  const PrimeParams params(static_cast<std::int64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lemma5_J_quadrature({1}, {2}, -1, params));
}
BENCHMARK(BM_CosineIntegralExact)->Arg(3)->Arg(5)->Arg(7);
