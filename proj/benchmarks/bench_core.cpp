#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "gshannon/bounds.hpp"
#include "gshannon/harness.hpp"
#include "gshannon/reconstruct.hpp"
#include "gshannon/signals.hpp"
#include "gshannon/special.hpp"

using namespace gshannon;

namespace {

const Bandwidth kQuarterPi(M_PI / 4);
const MillsEpsilon kSeventh(1.0 / 7.0);

}  // namespace

static void BM_GaussTailSeries(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(gauss_tail(1.0));
  }
}
BENCHMARK(BM_GaussTailSeries);

static void BM_GaussTailContinuedFraction(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(gauss_tail(3.0));
  }
}
BENCHMARK(BM_GaussTailContinuedFraction);

static void BM_ExtendedExp(benchmark::State& state) {
  const ExtendedReal x(-12.345, 3.2e-17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exp(x));
  }
}
BENCHMARK(BM_ExtendedExp);

static void BM_ExtendedSin(benchmark::State& state) {
  const ExtendedReal x(17.25, -1.1e-17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sin(x));
  }
}
BENCHMARK(BM_ExtendedSin);

static void BM_CompSum(benchmark::State& state) {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> terms(static_cast<std::size_t>(state.range(0)));
  for (auto& v : terms) v = dist(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(comp_sum(terms));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CompSum)->Range(64, 1 << 16);

static void BM_ReconstructGauss(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SampleSet samples = f0_samples(kQuarterPi, n);
  const GaussWidth r = optimal_width(kQuarterPi, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reconstruct_gauss(samples, r, 0.37));
  }
}
BENCHMARK(BM_ReconstructGauss)->Arg(7)->Arg(25)->Arg(100);

static void BM_ReconstructGaussExtended(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SampleSet samples = f0_samples(kQuarterPi, n);
  const GaussWidth r = optimal_width(kQuarterPi, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reconstruct_gauss_xr(samples, r, 0.37));
  }
}
BENCHMARK(BM_ReconstructGaussExtended)->Arg(7)->Arg(25)->Arg(100);

static void BM_MeasureError(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GaussWidth r = optimal_width(kQuarterPi, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(measure_error(kQuarterPi, n, r, 99));
  }
}
BENCHMARK(BM_MeasureError)->Arg(7)->Arg(25);

static void BM_BoundPairOpt(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(lower_bound_opt(kQuarterPi, kSeventh, 25));
    benchmark::DoNotOptimize(upper_bound_opt(kQuarterPi, 25));
  }
}
BENCHMARK(BM_BoundPairOpt);

static void BM_LemmaChecks(benchmark::State& state) {
  const GaussWidth r = optimal_width(kQuarterPi, 25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lemma_checks(kQuarterPi, kSeventh, r, 100));
  }
}
BENCHMARK(BM_LemmaChecks);

BENCHMARK_MAIN();
