#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "maxplus/maxplus.hpp"

using namespace maxplus;

namespace {

martin::KernelMatrix random_kernel(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> w(-9, 0);
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Value{static_cast<double>(w(rng))};
  }
  return martin::KernelMatrix(std::move(m));
}

void BM_KleeneStar(benchmark::State& state) {
  const auto k = random_kernel(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(martin::kleene_star(k));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KleeneStar)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNCubed);

void BM_MaxCycleMean(benchmark::State& state) {
  const auto k = random_kernel(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(martin::max_cycle_mean(k));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxCycleMean)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNCubed);

void BM_MinimalMartinSpace(benchmark::State& state) {
  const auto s = martin::kleene_star(random_kernel(static_cast<std::size_t>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(martin::minimal_martin_space(s));
}
BENCHMARK(BM_MinimalMartinSpace)->RangeMultiplier(4)->Range(8, 128);

void BM_StarKernel(benchmark::State& state) {
  const double lambda = static_cast<double>(state.range(0));
  const lq::Vector x{0.7, -1.2, 0.4};
  const lq::Vector y{-0.3, 2.1, 1.5};
  for (auto _ : state) benchmark::DoNotOptimize(lq::star_kernel(x, y, lambda));
}
BENCHMARK(BM_StarKernel)->Arg(0)->Arg(1);

void BM_VerifyHarmonic(benchmark::State& state) {
  const lq::GridSpec grid{4.0, 4.0 / static_cast<double>(state.range(0)), 1};
  const std::vector<lq::Vector> probes{{1.0, 0.0}, {0.0, -0.5}, {0.3, 0.7}};
  const lq::Vector n{0.0, 1.0};
  const lq::ScalarField h = [&n](std::span<const double> x) { return lq::horofunction(x, n, 1.0); };
  for (auto _ : state) benchmark::DoNotOptimize(lq::harmonic_residuals(h, 1.0, 1.0, probes, grid));
  state.SetItemsProcessed(state.iterations() * (2 * state.range(0) + 1) * (2 * state.range(0) + 1));
}
BENCHMARK(BM_VerifyHarmonic)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_HorosphereContour(benchmark::State& state) {
  const lq::Vector n{0.0, 1.0};
  const lq::ScalarField h = [&n](std::span<const double> x) { return lq::horofunction(x, n, 1.0); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        lq::horosphere_contour(h, -1.0, lq::BoundingBox{}, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_HorosphereContour)->Arg(120)->Arg(480)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
