#include "tourney/detection.hpp"

#include <cmath>
#include <stdexcept>

namespace tourney {

DetectionVerdict make_verdict(double statistic_value, double threshold) {
  return {statistic_value, threshold,
          statistic_value >= threshold ? Verdict::planted : Verdict::null_model};
}

std::int64_t wedge_statistic(const Tournament& t) {
  const auto s = t.scores();
  std::int64_t sum_sq = 0;
  for (auto v : s) sum_sq += v * v;
  const auto n = static_cast<std::int64_t>(t.size());
  // sum_i s_i^2 = sum_i (n-1) + 2 * wedge; the square sum is always even.
  return sum_sq / 2 - n * (n - 1) / 2;
}

WedgeMoments wedge_null_moments(std::size_t n) {
  if (n < 1) throw std::invalid_argument("wedge_null_moments: n must be at least 1");
  const double m = static_cast<double>(n);
  return {0.0, n < 3 ? 0.0 : m * (m - 1.0) * (m - 2.0) / 2.0};
}

double wedge_planted_mean(const ModelParams& params) {
  params.validate();
  const double m = static_cast<double>(params.n);
  const double triples = params.n < 3 ? 0.0 : m * (m - 1.0) * (m - 2.0) / 6.0;
  return triples * 4.0 * params.gamma * params.gamma;
}

DetectionVerdict wedge_test(const Tournament& t, const ModelParams& params) {
  params.validate();
  if (params.gamma <= 0.0) throw std::invalid_argument("wedge_test requires gamma > 0");
  if (params.n != t.size()) throw std::invalid_argument("wedge_test: size mismatch");
  return make_verdict(static_cast<double>(wedge_statistic(t)), wedge_planted_mean(params) / 2.0);
}

Eigen::MatrixXd to_dense(const Tournament& t) {
  const auto n = static_cast<Eigen::Index>(t.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j, ++k) {
      const double v = t.bit(k) ? 1.0 : -1.0;
      m(i, j) = v;
      m(j, i) = -v;
    }
  }
  return m;
}

double spectral_statistic(const Tournament& t) {
  if (t.size() == 1) return 0.0;
  // Singular values of T are |eigenvalues of iT|, and the spectrum of iT is
  // symmetric about zero, so sigma_max(T) = lambda_max(iT).
  Eigen::BDCSVD<Eigen::MatrixXd> svd(to_dense(t));
  return svd.singularValues()(0);
}

DetectionVerdict spectral_test(const Tournament& t, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("spectral_test requires epsilon > 0");
  return make_verdict(spectral_statistic(t) / std::sqrt(static_cast<double>(t.size())), 2.0 + epsilon);
}

}  // namespace tourney
