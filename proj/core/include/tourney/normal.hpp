#pragma once

namespace tourney {

/// Standard normal CDF, via erfc so the lower tail keeps full relative precision.
double normal_cdf(double x);

/// Standard normal density.
double normal_pdf(double x);

}  // namespace tourney
