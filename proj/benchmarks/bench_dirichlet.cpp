#include <benchmark/benchmark.h>

#include "rodbend/dirichlet.hpp"

static void BM_BuildH(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(rodbend::build_H(3.0, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_BuildH)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_EvaluateH(benchmark::State& state) {
  const auto h = rodbend::build_H(3.0);
  for (auto _ : state) benchmark::DoNotOptimize(h(0.3, -1.0));
}
BENCHMARK(BM_EvaluateH);

static void BM_ModelMsk(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rodbend::ModelMsk(3.0, 0.1));
}
BENCHMARK(BM_ModelMsk)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
