#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "rodbend/sine_series.hpp"

namespace {

rodbend::SineSeriesState broadband(int modes) {
  rodbend::SineSeriesState s{3.0, -1.0, {}};
  for (int n = 1; n <= modes; ++n) s.modes.push_back({n, 1.0 / n, 0.0});
  return s;
}

}  // namespace

static void BM_Evolve(benchmark::State& state) {
  const auto s = broadband(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rodbend::evolve(s, 0.1, 1.0));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Evolve)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void BM_Synthesize(benchmark::State& state) {
  const auto s = broadband(400);
  std::vector<double> xs(401);
  for (int i = 0; i <= 400; ++i) xs[i] = -3.0 + 6.0 * i / 400.0;
  for (auto _ : state) benchmark::DoNotOptimize(rodbend::synthesize(s, xs));
}
BENCHMARK(BM_Synthesize);

static void BM_Analyze(benchmark::State& state) {
  const auto f = [](double x) { return std::exp(-x * x) * (9.0 - x * x); };
  const auto g = [](double) { return 0.0; };
  for (auto _ : state) {
    benchmark::DoNotOptimize(rodbend::analyze(f, g, 3.0, static_cast<int>(state.range(0)), -1.0));
  }
}
BENCHMARK(BM_Analyze)->Arg(64)->Arg(400);

BENCHMARK_MAIN();
