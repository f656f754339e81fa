#include "tourney/spectral_theory.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tourney {

Eigen::MatrixXcd build_A(std::size_t n) {
  if (n < 1) throw std::invalid_argument("build_A: n must be at least 1");
  const auto size = static_cast<Eigen::Index>(n);
  const std::complex<double> iu(0.0, 1.0);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(size, size);
  for (Eigen::Index r = 0; r < size; ++r)
    for (Eigen::Index c = r + 1; c < size; ++c) {
      a(r, c) = iu;
      a(c, r) = -iu;
    }
  return a;
}

double closed_form_eigenvalue(std::size_t n, std::size_t i) {
  if (n < 1 || i < 1 || i > n) throw std::out_of_range("eigenvalue index must lie in 1..n");
  const double angle = static_cast<double>(2 * i - 1) * std::numbers::pi / (2.0 * static_cast<double>(n));
  return std::cos(angle) / std::sin(angle);
}

Eigenpair closed_form_eigenpair(std::size_t n, std::size_t i) {
  Eigenpair out;
  out.value = closed_form_eigenvalue(n, i);
  const auto size = static_cast<Eigen::Index>(n);
  out.vector.resize(size);
  const double freq = -std::numbers::pi * static_cast<double>(2 * i - 1) / static_cast<double>(n);
  for (Eigen::Index j = 0; j < size; ++j)
    out.vector(j) = std::polar(1.0, freq * static_cast<double>(j + 1));
  out.vector /= std::sqrt(static_cast<double>(n));
  return out;
}

double top_eigenvalue_asymptote(std::size_t n, std::size_t a) {
  if (n < 1 || a < 1 || a > n) throw std::out_of_range("eigenvalue index must lie in 1..n");
  const double scale = 2.0 * static_cast<double>(n) / std::numbers::pi;
  if (2 * a <= n + 1) return scale / static_cast<double>(2 * a - 1);
  const std::size_t mirror = n - a + 1;
  return -scale / static_cast<double>(2 * mirror - 1);
}

double hermitian_lambda_max(const Tournament& t) {
  const auto size = static_cast<Eigen::Index>(t.size());
  if (size == 1) return 0.0;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(size, size);
  std::size_t k = 0;
  for (Eigen::Index r = 0; r < size; ++r)
    for (Eigen::Index c = r + 1; c < size; ++c, ++k) {
      const double v = t.bit(k) ? 1.0 : -1.0;
      m(r, c) = {0.0, v};
      m(c, r) = {0.0, -v};
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(size - 1);
}

}  // namespace tourney

namespace tourney {

SpectrumCheck verify_closed_form_spectrum(std::size_t n) {
  if (n < 1 || n > kMaxDenseSpectrumSize)
    throw std::invalid_argument("verify_closed_form_spectrum: n must lie in 1.." +
                                std::to_string(kMaxDenseSpectrumSize));
  const auto size = static_cast<Eigen::Index>(n);
  const Eigen::MatrixXcd a = build_A(n);
  Eigen::MatrixXcd vectors(size, size);
  Eigen::VectorXd values(size);
  for (std::size_t i = 1; i <= n; ++i) {
    auto pair = closed_form_eigenpair(n, i);
    values(static_cast<Eigen::Index>(i - 1)) = pair.value;
    vectors.col(static_cast<Eigen::Index>(i - 1)) = pair.vector;
  }

  SpectrumCheck check;
  const Eigen::MatrixXcd residual = a * vectors - vectors * values.asDiagonal();
  check.max_residual = residual.colwise().norm().maxCoeff();

  Eigen::MatrixXcd gram = vectors.adjoint() * vectors;
  gram.diagonal().setZero();
  check.max_inner_product = gram.cwiseAbs().maxCoeff();

  const Eigen::MatrixXcd rebuilt = vectors * values.asDiagonal() * vectors.adjoint();
  check.max_reconstruction = (rebuilt - a).cwiseAbs().maxCoeff();
  return check;
}

}  // namespace tourney
