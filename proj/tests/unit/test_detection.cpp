#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "tourney/detection.hpp"
#include "tourney/model.hpp"
#include "tourney/spectral_theory.hpp"

using namespace tourney;

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

double sample_variance(const std::vector<double>& v) {
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return ss / static_cast<double>(v.size() - 1);
}

}  // namespace

TEST_CASE("wedge statistic: score identity equals the triple sum") {
  CHECK(wedge_statistic(oracle::cyclic3()) == -3);
  CHECK(oracle::wedge_direct(oracle::cyclic3()) == -3);
  const Tournament transitive = induced_tournament(Ranking::identity(3));
  CHECK(wedge_statistic(transitive) == 1);
  CHECK(oracle::wedge_direct(transitive) == 1);
  CHECK(wedge_statistic(Tournament::from_mask(1, 0)) == 0);

  RngStream rng(21, 0);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 3 + rng.below(38);
    const Tournament t = k % 2 ? sample_null(n, rng) : sample_planted_uniform({n, 0.2}, rng).second;
    REQUIRE(wedge_statistic(t) == oracle::wedge_direct(t));
  }
}

TEST_CASE("wedge statistic is invariant under relabeling") {
  RngStream rng(22, 0);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 2 + rng.below(30);
    const Tournament t = sample_null(n, rng);
    const auto order = oracle::random_ranking(n, rng).order();
    CHECK(wedge_statistic(t.relabeled(order)) == wedge_statistic(t));
  }
}

TEST_CASE("wedge null moments") {
  CHECK(wedge_null_moments(3).mean == 0.0);
  CHECK(wedge_null_moments(3).second_moment == 3.0);
  CHECK(wedge_null_moments(50).second_moment == 58800.0);
  CHECK(wedge_null_moments(2).second_moment == 0.0);

  double sum = 0.0, sum_sq = 0.0;
  for (const auto& t : oracle::all_tournaments(3)) {
    const double f = static_cast<double>(oracle::wedge_direct(t));
    sum += f;
    sum_sq += f * f;
  }
  CHECK(sum / 8.0 == 0.0);
  CHECK(sum_sq / 8.0 == 3.0);

  SUBCASE("null variance at n = 30 (Monte Carlo)") {
    std::vector<double> f;
    for (int d = 0; d < 100000; ++d) {
      RngStream stream(23, static_cast<std::uint64_t>(d));
      f.push_back(static_cast<double>(wedge_statistic(sample_null(30, stream))));
    }
    const double expected = wedge_null_moments(30).second_moment;
    CHECK(std::abs(sample_variance(f) - expected) <= 0.05 * expected);
  }
}

TEST_CASE("wedge planted mean") {
  CHECK(wedge_planted_mean({10, 0.0}) == 0.0);
  CHECK(wedge_planted_mean({50, 0.1}) == doctest::Approx(784.0).epsilon(1e-14));

  double exact = 0.0;
  for (const auto& t : oracle::all_tournaments(3))
    exact += oracle::planted_probability(t, 0.25) * static_cast<double>(oracle::wedge_direct(t));
  CHECK(exact == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(wedge_planted_mean({3, 0.25}) == doctest::Approx(exact).epsilon(1e-14));

  SUBCASE("Monte Carlo at n = 50, gamma = 0.1") {
    std::vector<double> f;
    for (int d = 0; d < 10000; ++d) {
      RngStream stream(24, static_cast<std::uint64_t>(d));
      f.push_back(static_cast<double>(wedge_statistic(sample_planted_uniform({50, 0.1}, stream).second)));
    }
    const auto [mean, se] = oracle::mean_se(f);
    CHECK(std::abs(mean - 784.0) <= 3.0 * se);
  }

  SUBCASE("planted variance stays within the t-shared-vertex bound") {
    const std::size_t n = 100;
    const double g = std::pow(static_cast<double>(n), -0.75);
    std::vector<double> f;
    for (int d = 0; d < 4000; ++d) {
      RngStream stream(25, static_cast<std::uint64_t>(d));
      f.push_back(static_cast<double>(wedge_statistic(sample_planted_uniform({n, g}, stream).second)));
    }
    const double m = static_cast<double>(n);
    const double envelope = std::pow(m, 3) + std::pow(m, 4) * g * g + std::pow(m, 5) * std::pow(g, 4);
    CHECK(sample_variance(f) <= 10.0 * envelope);
  }
}

TEST_CASE("wedge test") {
  const Tournament transitive = induced_tournament(Ranking::identity(3));
  // f = 1 equals the planted mean at gamma = 1/2.
  const auto at_mean = wedge_test(transitive, {3, 0.5});
  CHECK(at_mean.statistic_value == 1.0);
  CHECK(at_mean.threshold == 0.5);
  CHECK(at_mean.verdict == Verdict::planted);

  // Vertex 0 beats everyone, 1 -> 2 -> 3 -> 1: scores (3,-1,-1,-1), f = 0.
  const Tournament zero = Tournament::from_predicate(4, [](std::size_t i, std::size_t j) {
    return i == 0 || (i == 1 && j == 2) || (i == 2 && j == 3);
  });
  REQUIRE(wedge_statistic(zero) == 0);
  CHECK(wedge_test(zero, {4, 0.1}).verdict == Verdict::null_model);

  CHECK_THROWS_AS(wedge_test(transitive, {3, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(wedge_test(transitive, {4, 0.1}), std::invalid_argument);

  SUBCASE("n = 500, gamma = 5 n^{-3/4}") {
    const std::size_t n = 500;
    const ModelParams params{n, 5.0 * std::pow(500.0, -0.75)};
    int type1 = 0, type2 = 0;
    constexpr int kTrials = 200;
    for (int k = 0; k < kTrials; ++k) {
      RngStream stream(26, static_cast<std::uint64_t>(k));
      if (wedge_test(sample_null(n, stream), params).verdict == Verdict::planted) ++type1;
      if (wedge_test(sample_planted_uniform(params, stream).second, params).verdict == Verdict::null_model)
        ++type2;
    }
    CHECK((type1 + type2) / (2.0 * kTrials) <= 0.25);
  }
}

TEST_CASE("verdict rule") {
  CHECK(make_verdict(2.0, 2.05).verdict == Verdict::null_model);
  CHECK(make_verdict(2.05, 2.05).verdict == Verdict::planted);
  RngStream rng(27, 0);
  CHECK_THROWS_AS(spectral_test(sample_null(4, rng), 0.0), std::invalid_argument);
}

TEST_CASE("spectral statistic small cases") {
  RngStream rng(28, 0);
  CHECK(spectral_statistic(sample_null(1, rng)) == 0.0);
  CHECK(spectral_statistic(sample_null(2, rng)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(spectral_statistic(oracle::cyclic3()) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(hermitian_lambda_max(oracle::cyclic3()) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("spectral statistic: SVD and Hermitian routes agree") {
  RngStream rng(29, 0);
  for (std::size_t n : {2u, 3u, 7u, 31u, 64u, 150u}) {
    for (int k = 0; k < 3; ++k) {
      const Tournament t = k == 0 ? sample_null(n, rng) : sample_planted_uniform({n, 0.3}, rng).second;
      CHECK(std::abs(spectral_statistic(t) - hermitian_lambda_max(t)) <= 1e-8 * std::sqrt(double(n)));
    }
  }
}

TEST_CASE("spectral thresholds at n = 1600") {
  const std::size_t n = 1600;
  const double root = std::sqrt(static_cast<double>(n));
  constexpr int kTrials = 20;

  SUBCASE("null edge") {
    for (std::size_t size : {400u, 1600u}) {
      std::vector<double> ratios;
      for (int k = 0; k < kTrials; ++k) {
        RngStream stream(30, static_cast<std::uint64_t>(k));
        ratios.push_back(spectral_statistic(sample_null(size, stream)) / std::sqrt(double(size)));
      }
      const double med = median(ratios);
      CHECK(med >= 1.9);
      CHECK(med <= 2.1);
    }
  }
  SUBCASE("c = 1.5 is detected") {
    int planted = 0;
    for (int k = 0; k < kTrials; ++k) {
      RngStream stream(31, static_cast<std::uint64_t>(k));
      const Tournament t = sample_planted_uniform({n, 1.5 / root}, stream).second;
      if (spectral_test(t, 0.1).verdict == Verdict::planted) ++planted;
    }
    CHECK(planted >= 18);
  }
  SUBCASE("c = 0.5 is not") {
    int null = 0;
    for (int k = 0; k < kTrials; ++k) {
      RngStream stream(32, static_cast<std::uint64_t>(k));
      const Tournament t = sample_planted_uniform({n, 0.5 / root}, stream).second;
      if (spectral_test(t, 0.1).verdict == Verdict::null_model) ++null;
    }
    CHECK(null >= 18);
  }
}
