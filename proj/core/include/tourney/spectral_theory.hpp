#pragma once

#include <cstddef>
#include <utility>

#include <Eigen/Dense>

#include "tourney/tournament.hpp"

namespace tourney {

/// Hermitian matrix with +i above the diagonal, -i below and 0 on it. For a
/// planted tournament around the identity ranking, E[iT] = 2 gamma A.
Eigen::MatrixXcd build_A(std::size_t n);

/// i-th eigenvalue of A (1-based, decreasing): cot((2i-1) pi / (2n)).
double closed_form_eigenvalue(std::size_t n, std::size_t i);

struct Eigenpair {
  double value = 0.0;
  Eigen::VectorXcd vector;  ///< unit norm
};

/// Closed-form eigenpair of A; the vector has entries
/// exp(-i pi (2i-1) j / n) for j = 1..n, scaled to unit norm.
Eigenpair closed_form_eigenpair(std::size_t n, std::size_t i);

/// Leading-order value of lambda_a(A): 2n / ((2a-1) pi) for the top half of
/// the spectrum, and the negated mirror value for the bottom half.
double top_eigenvalue_asymptote(std::size_t n, std::size_t a);

/// lambda_max(iT) via a complex Hermitian eigensolve. Independent of the
/// real-SVD route used by spectral_statistic.
double hermitian_lambda_max(const Tournament& t);

}  // namespace tourney

namespace tourney {

/// Largest n for which the dense closed-form verification is run.
inline constexpr std::size_t kMaxDenseSpectrumSize = 1024;

struct SpectrumCheck {
  double max_residual = 0.0;        ///< max_i ||A v_i - lambda_i v_i||
  double max_inner_product = 0.0;   ///< max_{i != j} |<v_i, v_j>|
  double max_reconstruction = 0.0;  ///< max entry of |sum_i lambda_i v_i v_i^* - A|
};

/// Checks every closed-form eigenpair of A against a dense A. n must not
/// exceed kMaxDenseSpectrumSize.
SpectrumCheck verify_closed_form_spectrum(std::size_t n);

}  // namespace tourney
