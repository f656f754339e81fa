#include <doctest.h>

#include <array>
#include <map>
#include <stdexcept>

#include "oracles.hpp"
#include "tourney/model.hpp"
#include "tourney/ranking.hpp"
#include "tourney/tournament.hpp"

using namespace tourney;

TEST_CASE("tournament accessor is skew-symmetric with zero diagonal") {
  RngStream rng(7, 0);
  for (std::size_t n : {1u, 2u, 5u, 64u, 70u}) {
    const Tournament t = sample_null(n, rng);
    CHECK(t.edge_count() == n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(t.sign(i, i) == 0);
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) {
          CHECK((t.sign(i, j) == 1 || t.sign(i, j) == -1));
          CHECK(t.sign(j, i) == -t.sign(i, j));
        }
    }
  }
}

TEST_CASE("tournament rejects bad construction") {
  CHECK_THROWS_AS(Tournament::from_words(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Tournament::from_words(3, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Tournament::from_mask(12, 0), std::invalid_argument);
  const Tournament t = Tournament::from_mask(3, 0b101);
  CHECK_THROWS_AS(t.sign(3, 0), std::out_of_range);
}

TEST_CASE("ranking validation and helpers") {
  CHECK_THROWS_AS(Ranking({}), std::invalid_argument);
  CHECK_THROWS_AS(Ranking({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Ranking({0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Ranking({1, 2, 4}), std::invalid_argument);

  const Ranking pi({2, 1, 3});
  CHECK(pi.pairwise_sign(0, 1) == -1);
  CHECK(pi.pairwise_sign(1, 0) == 1);
  CHECK(pi.order() == std::vector<std::size_t>{1, 0, 2});
  CHECK(Ranking::from_order(pi.order()) == pi);
  CHECK(pi.reversed() == Ranking({2, 3, 1}));
}

TEST_CASE("sample_null") {
  RngStream rng(11, 0);
  CHECK_THROWS_AS(sample_null(0, rng), std::invalid_argument);
  CHECK(sample_null(1, rng).edge_count() == 0);

  double sum = 0.0;
  constexpr int kDraws = 100000;
  for (int d = 0; d < kDraws; ++d) {
    RngStream stream(11, static_cast<std::uint64_t>(d));
    const int s = sample_null(2, stream).sign(0, 1);
    CHECK((s == 1 || s == -1));
    sum += s;
  }
  CHECK(std::abs(sum / kDraws) < 0.02);
}

TEST_CASE("sample_planted") {
  RngStream rng(3, 0);
  CHECK_THROWS_AS(sample_planted({4, 0.1}, Ranking::identity(3), rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_planted({3, 0.6}, Ranking::identity(3), rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_planted({3, -0.1}, Ranking::identity(3), rng), std::invalid_argument);

  SUBCASE("gamma 1/2 reproduces the ranking") {
    for (int k = 0; k < 20; ++k) {
      const Ranking pi = oracle::random_ranking(9, rng);
      CHECK(sample_planted({9, 0.5}, pi, rng) == induced_tournament(pi));
    }
  }
  SUBCASE("gamma 0 is unbiased") {
    double sum = 0.0;
    constexpr int kDraws = 100000;
    for (int d = 0; d < kDraws; ++d) sum += sample_planted({2, 0.0}, Ranking({2, 1}), rng).sign(0, 1);
    CHECK(std::abs(sum / kDraws) < 0.02);
  }
  SUBCASE("agreement rate is 1/2 + gamma") {
    const std::size_t n = 100;
    const Ranking pi = oracle::random_ranking(n, rng);
    std::vector<double> per_draw;
    for (int d = 0; d < 10000; ++d) {
      const Tournament t = sample_planted({n, 0.3}, pi, rng);
      per_draw.push_back(static_cast<double>(alignment(pi, t)) / static_cast<double>(t.edge_count()));
    }
    const auto [mean, se] = oracle::mean_se(per_draw);
    CHECK(std::abs(mean - 0.6) <= 3.0 * se);
  }
}

TEST_CASE("sample_planted_uniform") {
  RngStream rng(5, 0);
  const auto [pi1, t1] = sample_planted_uniform({1, 0.2}, rng);
  CHECK(pi1 == Ranking::identity(1));
  CHECK(t1.edge_count() == 0);

  std::map<std::vector<std::uint32_t>, int> counts;
  constexpr int kDraws = 60000;
  for (int d = 0; d < kDraws; ++d) {
    const auto [pi, t] = sample_planted_uniform({3, 0.5}, rng);
    CHECK(t == induced_tournament(pi));
    ++counts[{pi.ranks().begin(), pi.ranks().end()}];
  }
  CHECK(counts.size() == 6);
  for (const auto& [ranks, c] : counts) CHECK(std::abs(c / double(kDraws) - 1.0 / 6.0) < 0.01);
}

TEST_CASE("induced_tournament") {
  const Tournament id = induced_tournament(Ranking::identity(3));
  const Tournament rev = induced_tournament(Ranking::reversal(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      CHECK(id.sign(i, j) == 1);
      CHECK(rev.sign(i, j) == -1);
    }
  const Tournament t = induced_tournament(Ranking({2, 1, 3}));
  CHECK(t.sign(0, 1) == -1);
  CHECK(t.sign(0, 2) == 1);
  CHECK(t.sign(1, 2) == 1);
}

TEST_CASE("kendall tau and footrule") {
  RngStream rng(13, 0);
  const Ranking a = oracle::random_ranking(10, rng);
  CHECK(kendall_tau(a, a) == 0);
  CHECK(spearman_footrule(a, a) == 0);
  CHECK(kendall_tau(Ranking::identity(10), Ranking::reversal(10)) == 45);
  CHECK(kendall_tau(Ranking({1, 2, 3}), Ranking({1, 3, 2})) == 1);
  CHECK(spearman_footrule(Ranking::identity(3), Ranking::reversal(3)) == 4);
  CHECK_THROWS_AS(kendall_tau(Ranking::identity(3), Ranking::identity(4)), std::invalid_argument);
  CHECK_THROWS_AS(spearman_footrule(Ranking::identity(3), Ranking::identity(4)), std::invalid_argument);

  SUBCASE("merge-sort count matches the pair loop") {
    for (int k = 0; k < 200; ++k) {
      const std::size_t n = 1 + rng.below(60);
      const Ranking x = oracle::random_ranking(n, rng), y = oracle::random_ranking(n, rng);
      CHECK(kendall_tau(x, y) == oracle::kendall_pairs(x, y));
      CHECK(kendall_tau(x, y) == kendall_tau(y, x));
    }
  }
  SUBCASE("Diaconis-Graham sandwich") {
    for (std::size_t n : {5u, 20u, 100u})
      for (int k = 0; k < 1000; ++k) {
        const Ranking x = oracle::random_ranking(n, rng), y = oracle::random_ranking(n, rng);
        const auto kt = kendall_tau(x, y), fr = spearman_footrule(x, y);
        REQUIRE(kt <= fr);
        REQUIRE(fr <= 2 * kt);
      }
  }
}

TEST_CASE("alignment") {
  RngStream rng(17, 0);
  const Ranking pi = oracle::random_ranking(12, rng);
  CHECK(alignment(pi, induced_tournament(pi)) == 66);
  CHECK(alignment(Ranking::identity(3), oracle::cyclic3()) == 1);
  CHECK_THROWS_AS(alignment(Ranking::identity(3), sample_null(4, rng)), std::invalid_argument);

  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + rng.below(40);
    const Ranking p = oracle::random_ranking(n, rng);
    const Tournament t = sample_null(n, rng);
    const auto a = alignment(p, t);
    CHECK(a == oracle::alignment_pairs(p, t));
    CHECK(alignment(p.reversed(), t) == -a);
    CHECK(std::abs(a) <= static_cast<std::int64_t>(t.edge_count()));
  }
}

TEST_CASE("planted likelihood increases strictly with alignment") {
  for (const auto& t : oracle::all_tournaments(3)) {
    for (double gamma : {0.05, 0.2, 0.45}) {
      const auto rankings = oracle::all_rankings(3);
      for (const auto& a : rankings)
        for (const auto& b : rankings) {
          const double la = oracle::conditional_probability(t, a, gamma);
          const double lb = oracle::conditional_probability(t, b, gamma);
          if (alignment(a, t) < alignment(b, t)) CHECK(la < lb);
          if (alignment(a, t) == alignment(b, t)) CHECK(la == doctest::Approx(lb));
        }
    }
  }
}

TEST_CASE("identical streams give identical tournaments") {
  for (std::uint64_t trial : {0ull, 1ull, 999ull}) {
    RngStream a(42, trial), b(42, trial);
    CHECK(sample_null(50, a) == sample_null(50, b));
    CHECK(sample_planted_uniform({50, 0.1}, a) == sample_planted_uniform({50, 0.1}, b));
  }
  RngStream a(42, 0), b(42, 1), c(43, 0);
  const Tournament ta = sample_null(50, a);
  CHECK_FALSE(ta == sample_null(50, b));
  CHECK_FALSE(ta == sample_null(50, c));
}

TEST_CASE("relabeling moves edges with their endpoints") {
  RngStream rng(19, 0);
  const Tournament t = sample_null(8, rng);
  const std::array<std::size_t, 8> sigma{3, 0, 7, 1, 6, 2, 5, 4};
  const Tournament r = t.relabeled(sigma);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) CHECK(r.sign(sigma[i], sigma[j]) == t.sign(i, j));
  const std::array<std::size_t, 8> bad{0, 0, 1, 2, 3, 4, 5, 6};
  CHECK_THROWS_AS(t.relabeled(bad), std::invalid_argument);
}
