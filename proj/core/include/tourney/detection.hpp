#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "tourney/model.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

enum class Verdict { null_model, planted };

struct DetectionVerdict {
  double statistic_value = 0.0;
  double threshold = 0.0;
  Verdict verdict = Verdict::null_model;
};

/// Verdict for a statistic against a threshold: planted iff value >= threshold.
DetectionVerdict make_verdict(double statistic_value, double threshold);

/// Sum over vertices i and pairs j < k (both != i) of T(i,j) T(i,k), computed
/// from scores as (1/2) sum_i s_i^2 - n(n-1)/2.
std::int64_t wedge_statistic(const Tournament& t);

struct WedgeMoments {
  double mean = 0.0;
  double second_moment = 0.0;
};

/// Null mean and second moment of the wedge statistic: (0, n(n-1)(n-2)/2).
WedgeMoments wedge_null_moments(std::size_t n);

/// Planted mean of the wedge statistic: C(n,3) (2 gamma)^2.
double wedge_planted_mean(const ModelParams& params);

/// Thresholds the wedge statistic at half the planted mean. gamma must be > 0.
DetectionVerdict wedge_test(const Tournament& t, const ModelParams& params);

/// Dense real copy of the tournament matrix.
Eigen::MatrixXd to_dense(const Tournament& t);

/// lambda_max(iT), computed as the largest singular value of T.
double spectral_statistic(const Tournament& t);

/// Planted iff spectral_statistic(t) / sqrt(n) >= 2 + epsilon. epsilon > 0.
DetectionVerdict spectral_test(const Tournament& t, double epsilon);

}  // namespace tourney
