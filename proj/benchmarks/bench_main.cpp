#include <benchmark/benchmark.h>

#include "rowcov/beta.hpp"
#include "rowcov/design.hpp"
#include "rowcov/mc_test.hpp"
#include "rowcov/pairwise.hpp"
#include "rowcov/rng.hpp"
#include "rowcov/sampling.hpp"
#include "rowcov/spiked.hpp"

using namespace rowcov;

namespace {

Matrix fixed_data(Index n, Index p) {
  RngStream rng(2024, 0);
  return sample_std_normal(n, p, rng);
}

void BM_GrassmannProjector(benchmark::State& state) {
  const Index n = state.range(0);
  const Matrix y = fixed_data(n, n / 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(grassmann_projector(y).G.sum());
  }
}
BENCHMARK(BM_GrassmannProjector)->Arg(20)->Arg(40)->Arg(80)->Arg(160);

void BM_SpikedStatisticFast(benchmark::State& state) {
  const Index n = state.range(0);
  const Matrix y = fixed_data(n, n / 2);
  const Vector c = Vector::Unit(n, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spiked_statistic_of(y, c));
  }
}
BENCHMARK(BM_SpikedStatisticFast)->Arg(20)->Arg(40)->Arg(80)->Arg(160);

void BM_MaxEpStatistic(benchmark::State& state) {
  const Index n = state.range(0);
  const Matrix y = fixed_data(n, n / 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(maxep_statistic_of(y).value);
  }
}
BENCHMARK(BM_MaxEpStatistic)->Arg(20)->Arg(40)->Arg(80);

void BM_NullCalibration(benchmark::State& state) {
  const int S = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const std::vector<double> stats = simulate_null_statistics(
        StatisticKind::MaxEp, Vector(), 20, 8, DesignSpec::column_means(), S,
        7);
    benchmark::DoNotOptimize(stats.back());
  }
}
BENCHMARK(BM_NullCalibration)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_BetaQuantile(benchmark::State& state) {
  double q = 0.95;
  for (auto _ : state) {
    benchmark::DoNotOptimize(beta_quantile(q, 4.0, 5.5));
  }
}
BENCHMARK(BM_BetaQuantile);

}  // namespace

BENCHMARK_MAIN();
