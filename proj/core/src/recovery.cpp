#include "tourney/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tourney/normal.hpp"

namespace tourney {

namespace {

double pairs_of(std::size_t n) {
  const double m = static_cast<double>(n);
  return m * (m - 1.0) / 2.0;
}

}  // namespace

Ranking ranking_by_wins(const Tournament& t) {
  const ScoreVector s(t);
  std::vector<std::size_t> order(t.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (s[a] != s[b]) return s[a] > s[b];
    return a > b;
  });
  return Ranking::from_order(order);
}

std::uint64_t pessimistic_error_statistic(const Tournament& t, const Ranking& hidden) {
  if (hidden.size() != t.size()) throw std::invalid_argument("pessimistic_error_statistic: size mismatch");
  const ScoreVector s(t);
  const auto order = hidden.order();
  std::uint64_t count = 0;
  for (std::size_t p = 0; p < order.size(); ++p)
    for (std::size_t q = p + 1; q < order.size(); ++q)
      if (s[order[p]] <= s[order[q]]) ++count;
  return count;
}

std::int64_t rbw_alignment_lower_bound_statistic(const Tournament& t) {
  const ScoreVector s(t);
  const std::size_t n = t.size();
  std::int64_t total = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      if (s[i] == s[j]) {
        total -= 1;
        continue;
      }
      const std::int64_t direction = s[i] > s[j] ? 1 : -1;
      total += direction * (t.bit(k) ? 1 : -1);
    }
  }
  return total;
}

double expected_error_bound(const ModelParams& params) {
  params.validate();
  if (params.gamma > 0.25) throw std::invalid_argument("expected_error_bound requires gamma <= 1/4");
  const double g = params.gamma;
  const double x = 2.0 * g * std::sqrt(static_cast<double>(params.n)) / std::sqrt(2.0 * (1.0 - 4.0 * g * g));
  return pairs_of(params.n) * normal_cdf(-x);
}

double mills_tail_bound(const ModelParams& params) {
  params.validate();
  if (params.gamma <= 0.0) throw std::invalid_argument("mills_tail_bound requires gamma > 0");
  const double n = static_cast<double>(params.n);
  const double g = params.gamma;
  return pairs_of(params.n) * std::exp(-g * g * n) / (g * std::sqrt(n));
}

bool concavity_check(double a, double b, std::size_t grid) {
  if (grid < 3) throw std::invalid_argument("concavity_check: grid must have at least 3 points");
  if (a < 0.0 || b < 0.0) throw std::invalid_argument("concavity_check: a and b must be non-negative");
  const double step = 1.0 / static_cast<double>(grid - 1);
  auto g = [&](std::size_t k) {
    const double y = static_cast<double>(k) * step;
    return (1.0 - y) * normal_cdf(-a * y - b);
  };
  for (std::size_t k = 1; k + 1 < grid; ++k)
    if (g(k - 1) - 2.0 * g(k) + g(k + 1) > 1e-9) return false;
  return true;
}

OptEnvelope opt_bounds(const ModelParams& params, double c_low, double c_up) {
  params.validate();
  if (params.gamma <= 0.0) throw std::invalid_argument("opt_bounds requires gamma > 0");
  const double n = static_cast<double>(params.n);
  const double centre = 2.0 * params.gamma * pairs_of(params.n);
  return {centre - c_low * n * std::log(n), centre + c_up * std::pow(n, 1.5)};
}

}  // namespace tourney
