#pragma once

#include <vector>

#include "tourney/detail/limits.hpp"
#include "tourney/model.hpp"

namespace tourney {

/// Planted probability of every tournament on params.n vertices, indexed by
/// the packed pair mask (see Tournament::from_mask). n <= 6.
std::vector<double> planted_pmf(const ModelParams& params);

/// chi^2(P || Q) = sum_T p(T)^2 / q(T) - 1 by enumerating tournaments and
/// hidden rankings. n <= 6.
double chi2_exact(const ModelParams& params);

/// Total variation distance between P and Q by enumeration. n <= 6.
double tv_exact(const ModelParams& params);

struct KlBound {
  double exact = 0.0;  ///< KL(Rad(1/2+g) || Rad(1/2-g))
  double bound = 0.0;  ///< 4 g^2 / (1/4 - g^2)
};

/// Closed-form KL between opposite-biased Rademacher variables and its
/// quadratic upper bound. Throws std::domain_error at gamma = 1/2 (the
/// divergence is infinite) and std::invalid_argument outside [0, 1/2].
KlBound kl_rademacher_bound(double gamma);

/// Lower bound on the expected Kendall tau error of any estimator:
/// (1/2) C(n,2) max{1 - 4 sqrt(n) g / sqrt(1/4 - g^2), (1/2) exp(-8 n g^2 / (1/4 - g^2))}.
double recovery_lower_bound(const ModelParams& params);

}  // namespace tourney
