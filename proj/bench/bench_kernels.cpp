// Serial reference kernels vs their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "ghzcka/oracles.h"
#include "ghzcka/physmodel.h"
#include "ghzcka/sweep.h"

namespace {

ghz::SweepSpec bench_spec() {
  ghz::SweepSpec spec;
  spec.n_nodes = {4, 6, 8, 10, 12, 14, 16};
  spec.d_step_km = 0.25;
  return spec;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto cfg = ghz::example_profile();
  const auto spec = bench_spec();
  for (auto _ : state) benchmark::DoNotOptimize(ghz::sweep_serial(cfg, spec));
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
  const auto cfg = ghz::example_profile();
  const auto spec = bench_spec();
  for (auto _ : state) benchmark::DoNotOptimize(ghz::sweep_parallel(cfg, spec));
}
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);

template <ghz::oracle::Execution exec>
void BM_McAvgLambda(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ghz::oracle::mc_avg_lambda(0.1, 0.01, state.range(0), 7, exec));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK_TEMPLATE(BM_McAvgLambda, ghz::oracle::Execution::Serial)
    ->Arg(1'000'000)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_McAvgLambda, ghz::oracle::Execution::Parallel)
    ->Arg(1'000'000)
    ->Unit(benchmark::kMillisecond);

template <ghz::oracle::Execution exec>
void BM_McMaxGeometric(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ghz::oracle::mc_max_geometric(5, 0.01, state.range(0), 7, exec));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK_TEMPLATE(BM_McMaxGeometric, ghz::oracle::Execution::Serial)
    ->Arg(1'000'000)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_McMaxGeometric, ghz::oracle::Execution::Parallel)
    ->Arg(1'000'000)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
