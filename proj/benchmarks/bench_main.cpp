#include <benchmark/benchmark.h>

#include "tourney/detection.hpp"
#include "tourney/model.hpp"
#include "tourney/ranking.hpp"
#include "tourney/recovery.hpp"

using namespace tourney;

static void SampleNull(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RngStream rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sample_null(n, rng));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(SampleNull)->RangeMultiplier(2)->Range(128, 4096)->Complexity();

static void SamplePlanted(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RngStream rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sample_planted_uniform({n, 0.05}, rng));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(SamplePlanted)->RangeMultiplier(2)->Range(128, 4096)->Complexity();

static void WedgeStatistic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RngStream rng(2, 0);
  const Tournament t = sample_null(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(wedge_statistic(t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(WedgeStatistic)->RangeMultiplier(2)->Range(128, 4096)->Complexity(benchmark::oNSquared);

static void RankingByWins(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RngStream rng(3, 0);
  const auto [hidden, t] = sample_planted_uniform({n, 0.1}, rng);
  for (auto _ : state) {
    const Ranking r = ranking_by_wins(t);
    benchmark::DoNotOptimize(kendall_tau(hidden, r));
  }
}
BENCHMARK(RankingByWins)->RangeMultiplier(2)->Range(128, 4096);

static void SpectralStatistic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RngStream rng(4, 0);
  const Tournament t = sample_null(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_statistic(t));
}
BENCHMARK(SpectralStatistic)->RangeMultiplier(2)->Range(100, 1600)->Unit(benchmark::kMillisecond);

static void BruteForceMle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RngStream rng(5, 0);
  const auto [hidden, t] = sample_planted_uniform({n, 0.25}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_mle(t));
}
BENCHMARK(BruteForceMle)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
