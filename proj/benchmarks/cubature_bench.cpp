#include "aastokes/harmonic.hpp"
#include "aastokes/heat.hpp"
#include "aastokes/kernels.hpp"
#include "aastokes/poisson.hpp"
#include "aastokes/problems.hpp"
#include "aastokes/quadrature.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

namespace {

using namespace aastokes;

void BM_KernelTable(benchmark::State& state) {
  const OrderIndex m(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    KernelTable t(m, 5.0, 3.7, 200, true);
    benchmark::DoNotOptimize(t.reach());
  }
}
BENCHMARK(BM_KernelTable)->DenseRange(1, 4);

void BM_ConvolveRange(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  std::vector<double> f(static_cast<std::size_t>(2 * K + 1));
  for (int i = -K; i <= K; ++i) f[static_cast<std::size_t>(i + K)] = std::exp(-0.01 * i * i);
  const KernelTable t(OrderIndex(3), 5.0, 2.0, 2 * K, false);
  std::vector<double> out(f.size());
  for (auto _ : state) {
    convolve_range(f, K, -K, K, t, KernelKind::value, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.size()));
}
BENCHMARK(BM_ConvolveRange)->Arg(65)->Arg(130)->Arg(260);

void BM_RuleConstruction(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(de_halfline_rule().size());
    benchmark::DoNotOptimize(mori_finite_rule(1.0).size());
  }
}
BENCHMARK(BM_RuleConstruction);

void BM_PoissonPoint(benchmark::State& state) {
  CubatureParams p;
  p.M = OrderIndex(static_cast<int>(state.range(0)));
  const auto grid = UniformGrid3::covering(0.025, 6.5);
  const auto g = problems::rotational_gaussian();
  for (auto _ : state)
    benchmark::DoNotOptimize(poisson_point_separated(g[1], p, grid, 1.0, {1.2, 1.2, 1.2}));
}
BENCHMARK(BM_PoissonPoint)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_PressurePoint(benchmark::State& state) {
  CubatureParams p;
  p.M = OrderIndex(static_cast<int>(state.range(0)));
  p.D = 5.0;
  const double h = 0.025;
  const auto grid = UniformGrid3::covering(h, 6.5);
  const auto hr = HarmonicRule::make(p, h);
  const auto F = problems::gradient_forcing_divergence();
  for (auto _ : state)
    benchmark::DoNotOptimize(pressure_point_separated(F, hr, grid, 1.0, {1.2, 1.2, 1.2}));
}
BENCHMARK(BM_PressurePoint)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_HeatSourcePoint(benchmark::State& state) {
  CubatureParams p;
  p.M = OrderIndex(2);
  const double h = 0.025;
  const double tau = h / 4;
  const int ell = static_cast<int>(std::lround(1.0 / tau));
  const auto grid = UniformGrid3::covering(h, 6.5);
  const auto phi = problems::heat_source();
  const QuadRule rule = mori_finite_rule(tau * ell);
  for (auto _ : state)
    benchmark::DoNotOptimize(heat_point_separated(phi, p, grid, tau, ell, rule, {1.2, 1.2, 1.2}));
}
BENCHMARK(BM_HeatSourcePoint)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
