#pragma once

// Brute-force reference computations used only by tests. None of these call
// into the code paths they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "tourney/ranking.hpp"
#include "tourney/rng.hpp"
#include "tourney/tournament.hpp"

namespace oracle {

using tourney::Ranking;
using tourney::Tournament;

inline std::vector<std::vector<int>> dense(const Tournament& t) {
  const std::size_t n = t.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = t.sign(i, j);
  return m;
}

// Direct O(n^3) wedge sum: sum_i sum_{j<k, j,k != i} T(i,j) T(i,k).
inline std::int64_t wedge_direct(const Tournament& t) {
  const auto m = dense(t);
  const std::size_t n = t.size();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (j != i && k != i) total += m[i][j] * m[i][k];
  return total;
}

inline std::uint64_t kendall_pairs(const Ranking& a, const Ranking& b) {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if ((a.rank(i) < a.rank(j)) != (b.rank(i) < b.rank(j))) ++d;
  return d;
}

inline std::int64_t alignment_pairs(const Ranking& pi, const Tournament& t) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) total += t.sign(i, j) * pi.pairwise_sign(i, j);
  return total;
}

// All rankings of size n in lexicographic rank-array order.
inline std::vector<Ranking> all_rankings(std::size_t n) {
  std::vector<std::uint32_t> r(n);
  std::iota(r.begin(), r.end(), 1u);
  std::vector<Ranking> out;
  do out.emplace_back(r);
  while (std::next_permutation(r.begin(), r.end()));
  return out;
}

// Planted probability of t with hidden ranking pi, pair by pair.
inline double conditional_probability(const Tournament& t, const Ranking& pi, double gamma) {
  double p = 1.0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      p *= (t.sign(i, j) == pi.pairwise_sign(i, j)) ? 0.5 + gamma : 0.5 - gamma;
  return p;
}

inline double planted_probability(const Tournament& t, double gamma) {
  const auto rankings = all_rankings(t.size());
  double p = 0.0;
  for (const auto& pi : rankings) p += conditional_probability(t, pi, gamma);
  return p / static_cast<double>(rankings.size());
}

inline std::vector<Tournament> all_tournaments(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<Tournament> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) out.push_back(Tournament::from_mask(n, m));
  return out;
}

inline Tournament random_tournament(std::size_t n, tourney::RngStream& rng) {
  return Tournament::from_predicate(n, [&](std::size_t, std::size_t) { return rng.bernoulli(0.5); });
}

inline Ranking random_ranking(std::size_t n, tourney::RngStream& rng) {
  std::vector<std::uint32_t> r(n);
  std::iota(r.begin(), r.end(), 1u);
  for (std::size_t i = n; i > 1; --i) std::swap(r[i - 1], r[rng.below(i)]);
  return Ranking(r);
}

// n = 3 cycle 1 -> 2 -> 3 -> 1 (0-based: T(0,1) = T(1,2) = +1, T(0,2) = -1).
inline Tournament cyclic3() {
  return Tournament::from_predicate(3, [](std::size_t i, std::size_t j) { return !(i == 0 && j == 2); });
}

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

inline MeanSe mean_se(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

}  // namespace oracle
