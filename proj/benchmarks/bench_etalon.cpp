#include <benchmark/benchmark.h>

#include "rodbend/etalon.hpp"

static void BM_Etalon(benchmark::State& state) {
  const auto kind = static_cast<rodbend::EtalonKind>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rodbend::evaluate_etalon(kind, 0.5, -0.25, 0.1));
  }
}
BENCHMARK(BM_Etalon)->DenseRange(0, 3);

// Small epsilon pushes the cutoff out to k ~ 1/eps.
static void BM_EtalonSmallEpsilon(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rodbend::evaluate_etalon(rodbend::EtalonKind::PoleRe, 0.5, -0.25, 0.01));
  }
}
BENCHMARK(BM_EtalonSmallEpsilon);

BENCHMARK_MAIN();
