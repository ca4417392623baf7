#include <benchmark/benchmark.h>

#include "skewsim/density.hpp"
#include "skewsim/graphgen.hpp"
#include "skewsim/moments.hpp"
#include "skewsim/spectra.hpp"
#include "skewsim/symmetric_eigen.hpp"

namespace {

using namespace skewsim;

void BM_SampleGnp(benchmark::State& state) {
  const auto n = static_cast<std::int32_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_gnp_oriented({n, 0.2, seed++}));
  }
}
BENCHMARK(BM_SampleGnp)->Arg(200)->Arg(1000);

void BM_SampleRegularRejection(benchmark::State& state) {
  const auto n = static_cast<std::int32_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sample_regular_oriented({n, 3, seed++, 100000, RegularMethod::PairingRejection}));
  }
}
BENCHMARK(BM_SampleRegularRejection)->Arg(200)->Arg(1000);

void BM_SampleRegularRepair(benchmark::State& state) {
  const auto n = static_cast<std::int32_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sample_regular_oriented({n, 50, seed++, 100000, RegularMethod::PairingRepair}));
  }
}
BENCHMARK(BM_SampleRegularRepair)->Arg(500);

void BM_SkewSpectrum(benchmark::State& state) {
  const auto n = static_cast<std::int32_t>(state.range(0));
  const OrientedGraph g = sample_gnp_oriented({n, 0.2, 7});
  const SkewAdjacency S = skew_adjacency(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(skew_spectrum(S));
  }
}
BENCHMARK(BM_SkewSpectrum)->Arg(128)->Arg(256)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_TraceMomentExact(benchmark::State& state) {
  const Rational half(1, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expected_trace_moment_exact(5, 6, half));
  }
}
BENCHMARK(BM_TraceMomentExact)->Unit(benchmark::kMillisecond);

void BM_McKayCdf(benchmark::State& state) {
  const DensityModel m = DensityModel::mckay(3);
  double x = -2.8;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cdf(m, x));
    x += 0.01;
    if (x > 2.8) x = -2.8;
  }
}
BENCHMARK(BM_McKayCdf);

}  // namespace

BENCHMARK_MAIN();
