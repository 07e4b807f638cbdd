#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>

#include "pdae/integrators.hpp"
#include "pdae/spectral.hpp"
#include "pdae/verification.hpp"

namespace {

using namespace pdae;

StateU smooth_state(const GridPtr& grid) {
  return {Field::sample(grid, [](double x) { return std::sin(std::numbers::pi * x); }),
          Field::sample(grid, [](double x) { return std::sin(2 * std::numbers::pi * x); })};
}

void BM_DstForward(benchmark::State& state) {
  auto grid = Grid1D::make(static_cast<std::size_t>(state.range(0)));
  const Field f = smooth_state(grid).u;
  for (auto _ : state) benchmark::DoNotOptimize(spectral::dst_forward(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DstForward)->RangeMultiplier(2)->Range(16, 1024)->Complexity(benchmark::oNSquared);

void BM_SolveShifted(benchmark::State& state) {
  auto grid = Grid1D::make(static_cast<std::size_t>(state.range(0)));
  const Field g = smooth_state(grid).u;
  for (auto _ : state) benchmark::DoNotOptimize(spectral::solve_shifted(g, 1.0));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveShifted)->RangeMultiplier(2)->Range(16, 1024)->Complexity(benchmark::oN);

void BM_EvalF(benchmark::State& state) {
  auto grid = Grid1D::make(static_cast<std::size_t>(state.range(0)));
  const StateU U = smooth_state(grid);
  const auto S = nonlinearity::SourcePair::zero(grid);
  for (auto _ : state) benchmark::DoNotOptimize(nonlinearity::eval_F(U, 0.0, S));
}
BENCHMARK(BM_EvalF)->Arg(64)->Arg(256)->Arg(1024);

template <integrators::Method M>
void BM_Step(benchmark::State& state) {
  auto grid = Grid1D::make(static_cast<std::size_t>(state.range(0)));
  const StateU U = smooth_state(grid);
  const auto S = nonlinearity::SourcePair::zero(grid);
  integrators::SolveConfig cfg;
  for (auto _ : state) {
    switch (M) {
      case integrators::Method::exp_euler:
        benchmark::DoNotOptimize(integrators::step_exp_euler(U, 0.0, 1e-3, S));
        break;
      case integrators::Method::imex:
        benchmark::DoNotOptimize(integrators::step_imex(U, 0.0, 1e-3, S));
        break;
      case integrators::Method::picard:
        benchmark::DoNotOptimize(integrators::picard_slab(U, 0.0, 1e-3, cfg, S));
        break;
    }
  }
}
BENCHMARK(BM_Step<integrators::Method::exp_euler>)->Arg(64)->Arg(256);
BENCHMARK(BM_Step<integrators::Method::imex>)->Arg(64)->Arg(256);
BENCHMARK(BM_Step<integrators::Method::picard>)->Arg(64)->Arg(256);

void BM_CheckLipschitz(benchmark::State& state) {
  auto grid = Grid1D::make(64);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verification::check_lipschitz(1000, grid, 0, {1.0}));
  }
}
BENCHMARK(BM_CheckLipschitz)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
