#include <benchmark/benchmark.h>

#include "horo/transforms/helgason.hpp"
#include "horo/transforms/measures.hpp"
#include "horo/transforms/radon.hpp"
#include "horo/transforms/test_function.hpp"

namespace tr = horo::tr;

namespace {

const tr::MeasureNormalization& norm() {
  static const tr::MeasureNormalization n{tr::calibrate_c_N(tr::default_nbar_spec()),
                                          tr::calibrate_c_A(), 1.0};
  return n;
}

tr::TransformGrids grids(int n_beta) {
  tr::TransformGrids g;
  g.n_beta = n_beta;
  return g;
}

const tr::TestFunction& bump() {
  static const tr::TestFunction f = tr::seeded_bumps(20240611, 1).front();
  return f;
}

void BM_RadonSerial(benchmark::State& state) {
  const auto g = grids(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tr::serial::radon_grid(bump(), norm(), g));
}

void BM_RadonParallel(benchmark::State& state) {
  const auto g = grids(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tr::radon_grid(bump(), norm(), g));
}

void BM_HelgasonSerial(benchmark::State& state) {
  const auto g = grids(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tr::serial::helgason_grid(bump(), norm(), g));
}

void BM_HelgasonParallel(benchmark::State& state) {
  const auto g = grids(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tr::helgason_grid(bump(), norm(), g));
}

}  // namespace

BENCHMARK(BM_RadonSerial)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RadonParallel)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HelgasonSerial)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HelgasonParallel)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
