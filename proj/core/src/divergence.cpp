#include "tourney/divergence.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tourney/ranking.hpp"

namespace tourney {

namespace {

// Probability of each tournament mask, averaged over all hidden rankings.
std::vector<long double> enumerate_planted(const ModelParams& params) {
  params.validate();
  const std::size_t n = params.n;
  const std::size_t pairs = n * (n - 1) / 2;

  std::vector<std::uint64_t> ranking_masks;
  std::vector<std::uint32_t> ranks(n);
  std::iota(ranks.begin(), ranks.end(), 1u);
  do {
    ranking_masks.push_back(induced_tournament(Ranking(ranks)).mask());
  } while (std::next_permutation(ranks.begin(), ranks.end()));

  // weight[d] = (1/2+g)^(pairs-d) (1/2-g)^d for d disagreeing pairs.
  const long double up = 0.5L + params.gamma;
  const long double down = 0.5L - params.gamma;
  std::vector<long double> weight(pairs + 1);
  for (std::size_t d = 0; d <= pairs; ++d)
    weight[d] = std::pow(up, static_cast<long double>(pairs - d)) *
                std::pow(down, static_cast<long double>(d));

  const std::uint64_t count = std::uint64_t{1} << pairs;
  const long double inv_perms = 1.0L / static_cast<long double>(ranking_masks.size());
  std::vector<long double> pmf(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    long double p = 0.0L;
    for (auto rm : ranking_masks) p += weight[std::popcount(mask ^ rm)];
    pmf[mask] = p * inv_perms;
  }
  return pmf;
}

}  // namespace

std::vector<double> planted_pmf(const ModelParams& params) {
  detail::require_enumerable(params.n, "planted_pmf");
  const auto pmf = enumerate_planted(params);
  return {pmf.begin(), pmf.end()};
}

double chi2_exact(const ModelParams& params) {
  detail::require_enumerable(params.n, "chi2_exact");
  const auto pmf = enumerate_planted(params);
  const long double inv_q = static_cast<long double>(pmf.size());
  long double sum = 0.0L;
  for (auto p : pmf) sum += p * p * inv_q;
  return static_cast<double>(sum - 1.0L);
}

double tv_exact(const ModelParams& params) {
  detail::require_enumerable(params.n, "tv_exact");
  const auto pmf = enumerate_planted(params);
  const long double q = 1.0L / static_cast<long double>(pmf.size());
  long double sum = 0.0L;
  for (auto p : pmf) sum += std::fabs(p - q);
  return static_cast<double>(0.5L * sum);
}

KlBound kl_rademacher_bound(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 0.5)) throw std::invalid_argument("gamma must lie in [0, 1/2]");
  if (gamma == 0.5) throw std::domain_error("KL divergence is infinite at gamma = 1/2");
  const double up = 0.5 + gamma;
  const double down = 0.5 - gamma;
  const double log_ratio = std::log(up / down);
  return {up * log_ratio - down * log_ratio, 4.0 * gamma * gamma / (0.25 - gamma * gamma)};
}

double recovery_lower_bound(const ModelParams& params) {
  params.validate();
  if (params.gamma >= 0.5) throw std::invalid_argument("recovery_lower_bound requires gamma < 1/2");
  const double n = static_cast<double>(params.n);
  const double g = params.gamma;
  const double denom = 0.25 - g * g;
  const double pinsker = 1.0 - 4.0 * std::sqrt(n) * g / std::sqrt(denom);
  const double huber = 0.5 * std::exp(-8.0 * n * g * g / denom);
  return 0.5 * (n * (n - 1.0) / 2.0) * std::max(pinsker, huber);
}

}  // namespace tourney
