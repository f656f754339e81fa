#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tourney/model.hpp"
#include "tourney/ranking.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

/// Win-minus-loss scores s_i = sum_k T(i,k). Sums to zero.
class ScoreVector {
 public:
  explicit ScoreVector(const Tournament& t) : scores_(t.scores()) {}
  std::size_t size() const noexcept { return scores_.size(); }
  std::int64_t operator[](std::size_t i) const { return scores_[i]; }
  const std::vector<std::int64_t>& values() const noexcept { return scores_; }

 private:
  std::vector<std::int64_t> scores_;
};

/// Ranks vertices by decreasing score. Equal scores go to the larger vertex
/// index first, i.e. for s_i = s_j with i < j, i is ranked below j.
Ranking ranking_by_wins(const Tournament& t);

/// Number of pairs (a above b in `hidden`) with s_a <= s_b: the Kendall tau
/// error of ranking by wins when every tie is broken the wrong way.
std::uint64_t pessimistic_error_statistic(const Tournament& t, const Ranking& hidden);

/// sum_{i<j} (1{s_i > s_j} - 1{s_i < s_j}) T(i,j) - #{i<j : s_i = s_j}.
/// A lower bound on alignment(ranking_by_wins(t), t) under any tie rule.
std::int64_t rbw_alignment_lower_bound_statistic(const Tournament& t);

/// C(n,2) Phi(-2 g sqrt(n) / sqrt(2 (1 - 4 g^2))). Requires 0 <= gamma <= 1/4.
double expected_error_bound(const ModelParams& params);

/// C(n,2) exp(-g^2 n) / (g sqrt(n)): the Gaussian-tail form of
/// expected_error_bound with constant 1. Requires gamma > 0.
double mills_tail_bound(const ModelParams& params);

/// True iff g(y) = (1 - y) Phi(-a y - b) has second central differences
/// <= 1e-9 at every interior point of a uniform grid on [0, 1].
bool concavity_check(double a, double b, std::size_t grid);

struct OptEnvelope {
  double lower = 0.0;
  double upper = 0.0;
};

/// Empirical envelope for the maximum alignment of a planted tournament:
/// 2 g C(n,2) - c_low n log n and 2 g C(n,2) + c_up n^{3/2}.
OptEnvelope opt_bounds(const ModelParams& params, double c_low = 2.0, double c_up = 2.0);

struct MleResult {
  Ranking best_ranking = Ranking::identity(1);
  std::int64_t best_alignment = 0;
  std::uint64_t optima_count = 0;
};

/// Largest n accepted by brute_force_mle.
inline constexpr std::size_t kMaxMleSize = 9;

/// Exhaustive alignment maximization over all n! rankings. Among maximizers
/// returns the lexicographically smallest rank array. Throws
/// std::invalid_argument for n > kMaxMleSize.
MleResult brute_force_mle(const Tournament& t);

}  // namespace tourney
