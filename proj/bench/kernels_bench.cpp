// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "corank2/classify.hpp"
#include "corank2/grid.hpp"

using namespace corank2;

namespace {

// Identifier of (uv, u^2 + v^2 + u^3) plus a quartic term so the zero set is not trivial.
Jet2<double> sample_identifier() {
  Jet2<double> f1(4), f2(4);
  f1.coeff(1, 1) = 1.0;
  f2.coeff(2, 0) = 1.0;
  f2.coeff(0, 2) = 1.0;
  f2.coeff(3, 0) = 1.0;
  f2.coeff(2, 2) = 0.5;
  return jacobian_identifier(MapJet2<double>{f1, f2}).lambda;
}

void BM_EvaluateSerial(benchmark::State& state) {
  const auto g = sample_identifier();
  const GridSpec spec{0.5, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_grid_serial(g, spec));
}

void BM_EvaluateParallel(benchmark::State& state) {
  const auto g = sample_identifier();
  const GridSpec spec{0.5, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_grid_parallel(g, spec, static_cast<int>(state.range(1))));
}

void BM_MarchingSerial(benchmark::State& state) {
  const auto grid = evaluate_grid_serial(sample_identifier(), GridSpec{0.5, static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(marching_squares_serial(grid));
}

void BM_MarchingParallel(benchmark::State& state) {
  const auto grid = evaluate_grid_serial(sample_identifier(), GridSpec{0.5, static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(marching_squares_parallel(grid, static_cast<int>(state.range(1))));
}

}  // namespace

BENCHMARK(BM_EvaluateSerial)->Arg(200)->Arg(800);
BENCHMARK(BM_EvaluateParallel)->ArgsProduct({{200, 800}, {1, 2, 4}});
BENCHMARK(BM_MarchingSerial)->Arg(200)->Arg(800);
BENCHMARK(BM_MarchingParallel)->ArgsProduct({{200, 800}, {1, 2, 4}});

BENCHMARK_MAIN();
