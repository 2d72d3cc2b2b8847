#include <benchmark/benchmark.h>

#include "rodbend/hardy.hpp"

static void BM_HardyOrigin(benchmark::State& state) {
  const rodbend::HardyQuery q{0.0, 0.0, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(rodbend::hardy(q));
}
BENCHMARK(BM_HardyOrigin);

// Oscillatory regime: cost grows with |X|.
static void BM_HardyOscillatory(benchmark::State& state) {
  const rodbend::HardyQuery q{0.0, static_cast<double>(state.range(0)), -2.0};
  for (auto _ : state) benchmark::DoNotOptimize(rodbend::hardy(q));
}
BENCHMARK(BM_HardyOscillatory)->Arg(5)->Arg(20)->Arg(50);

static void BM_HardyGrowth(benchmark::State& state) {
  const rodbend::HardyQuery q{0.0, 0.0, 15.0};
  for (auto _ : state) benchmark::DoNotOptimize(rodbend::hardy(q));
}
BENCHMARK(BM_HardyGrowth);

static void BM_InnerRoot(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rodbend::inner_root(1.0, -2.0));
}
BENCHMARK(BM_InnerRoot);

BENCHMARK_MAIN();
