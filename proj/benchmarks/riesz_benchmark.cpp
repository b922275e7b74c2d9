#include <benchmark/benchmark.h>

#include <cmath>

#include "liouville/closed_forms/closed_form.hpp"
#include "liouville/potential/riesz.hpp"

namespace {

using namespace liouville;

ScalarField bubble_density(const Grid2D& g, double mu) {
  const double lam = (4.0 - mu) / 4.0;
  return sample(bubble_nonlocal({mu, {0.0, 0.0}, 4.0}), g, [lam](double v) { return std::exp(lam * v); });
}

void KernelTableBuild(benchmark::State& state) {
  const double mu = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(KernelTable::riesz(mu, 0.01).center());
}
BENCHMARK(KernelTableBuild)->Arg(5)->Arg(10)->Arg(15)->Unit(benchmark::kMillisecond);

void RieszFft(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid2D g = make_grid({0.0, 0.0}, 2.0, n);
  const ScalarField dens = bubble_density(g, 1.0);
  const RieszOperator op(g, RieszConfig{1.0});
  for (auto _ : state) benchmark::DoNotOptimize(op.apply(dens)[0]);
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n) * n);
}
BENCHMARK(RieszFft)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond)->Complexity();

void RieszDirectAllNodes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid2D g = make_grid({0.0, 0.0}, 2.0, n);
  const ScalarField dens = bubble_density(g, 1.0);
  const RegionMask all = whole_grid(g);
  std::vector<Point> targets;
  for (std::size_t k = 0; k < g.size(); ++k) targets.push_back(g.node(k));
  for (auto _ : state) benchmark::DoNotOptimize(riesz_direct(dens, all, RieszConfig{1.0}, targets)[0]);
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n) * n);
}
BENCHMARK(RieszDirectAllNodes)->RangeMultiplier(2)->Range(32, 128)->Unit(benchmark::kMillisecond)->Complexity();

void RieszDirectOffNode(benchmark::State& state) {
  const Grid2D g = make_grid({0.0, 0.0}, 2.0, static_cast<int>(state.range(0)));
  const ScalarField dens = bubble_density(g, 1.0);
  const RegionMask all = whole_grid(g);
  const std::vector<Point> targets{{0.013, -0.021}, {0.5, 0.25}};
  for (auto _ : state) benchmark::DoNotOptimize(riesz_direct(dens, all, RieszConfig{1.0}, targets)[0]);
}
BENCHMARK(RieszDirectOffNode)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
