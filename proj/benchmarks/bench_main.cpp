#include <benchmark/benchmark.h>

#include "ductwave/dispersion.hpp"
#include "ductwave/profile.hpp"

using namespace ductwave;

static void BM_boundaryN(benchmark::State& state) {
  auto profile = VelocityProfile::exponential(1.0, 0.0);
  const double lambda = 0.5 * (profile.mMin() + profile.mMax());
  for (auto _ : state) {
    benchmark::DoNotOptimize(boundaryN(profile, lambda, +1));
  }
}
BENCHMARK(BM_boundaryN);

BENCHMARK_MAIN();
