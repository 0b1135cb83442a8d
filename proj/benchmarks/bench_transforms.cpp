#include <benchmark/benchmark.h>

#include "mixmod/gabor.hpp"
#include "mixmod/mixed_norm.hpp"
#include "mixmod/operators.hpp"
#include "mixmod/rng.hpp"
#include "mixmod/tf_core.hpp"
#include "mixmod/wilson.hpp"

using namespace mixmod;

static void BM_Dft(benchmark::State& state) {
  CounterRng rng(1);
  const auto f = random_signal(rng, std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dft(f, Direction::Forward));
}
BENCHMARK(BM_Dft)->RangeMultiplier(2)->Range(8, 64)->Arg(30);

static void BM_StftFull(benchmark::State& state) {
  const auto n = std::size_t(state.range(0));
  CounterRng rng(2);
  const auto f = random_signal(rng, n);
  const auto g = gaussian_window(n);
  for (auto _ : state) benchmark::DoNotOptimize(stft_full(f, g));
}
BENCHMARK(BM_StftFull)->RangeMultiplier(2)->Range(8, 64);

static void BM_StftRoundTrip(benchmark::State& state) {
  const auto n = std::size_t(state.range(0));
  CounterRng rng(3);
  const auto f = random_signal(rng, n);
  const auto g = gaussian_window(n);
  for (auto _ : state) benchmark::DoNotOptimize(istft_full(stft_full(f, g), g, g));
}
BENCHMARK(BM_StftRoundTrip)->RangeMultiplier(2)->Range(8, 64);

// Fresh system each iteration so the eigendecomposition is not cached.
static void BM_TightWindow(benchmark::State& state) {
  const auto n = std::size_t(state.range(0));
  const auto g = gaussian_window(n);
  for (auto _ : state) {
    const GaborSystem sys(GaborLattice(n, 2, 2), g);
    benchmark::DoNotOptimize(canonical_window(sys, CanonicalKind::Tight));
  }
}
BENCHMARK(BM_TightWindow)->RangeMultiplier(2)->Range(8, 64);

static void BM_WilsonBasis(benchmark::State& state) {
  const auto n = std::size_t(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_wilson_basis(n, 4));
}
BENCHMARK(BM_WilsonBasis)->Arg(16)->Arg(32)->Arg(64);

static void BM_StftFull2d(benchmark::State& state) {
  const auto n = std::size_t(state.range(0));
  CounterRng rng(4);
  const auto k = random_gaussian_matrix(rng, n, n);
  const auto w = random_gaussian_matrix(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(stft_full_2d(k, w));
}
BENCHMARK(BM_StftFull2d)->Arg(4)->Arg(8)->Arg(16);

static void BM_SchattenNorm(benchmark::State& state) {
  const auto n = std::size_t(state.range(0));
  CounterRng rng(5);
  const KernelOperator k(random_gaussian_matrix(rng, n, n));
  for (auto _ : state) benchmark::DoNotOptimize(schatten_norm(k, 1.5));
}
BENCHMARK(BM_SchattenNorm)->RangeMultiplier(2)->Range(8, 64);

static void BM_SchattenBoundRhs(benchmark::State& state) {
  const auto n = std::size_t(state.range(0));
  CounterRng rng(6);
  const KernelOperator k(random_gaussian_matrix(rng, n, n));
  const auto sys = canonical_system(GaborSystem(GaborLattice(n, 2, 2), gaussian_window(n)), CanonicalKind::Tight);
  for (auto _ : state) benchmark::DoNotOptimize(schatten_bound_rhs(k, sys, 1.5));
}
BENCHMARK(BM_SchattenBoundRhs)->Arg(8)->Arg(16);

static void BM_MixedNorm(benchmark::State& state) {
  const auto n = std::size_t(state.range(0));
  CounterRng rng(7);
  const auto v = stft_full_2d(random_gaussian_matrix(rng, n, n), random_gaussian_matrix(rng, n, n));
  auto spec = MixedNormSpec::permuted({2, 2, 1.5, 1.5}, kernel_slice_permutation(1));
  spec.weight = Weight::poly(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(mixed_norm(v, spec));
}
BENCHMARK(BM_MixedNorm)->Arg(4)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
