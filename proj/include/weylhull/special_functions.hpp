#pragma once

#include <complex>

namespace weylhull {

/// Standard normal CDF, Phi(a) = erfc(-a/sqrt 2)/2.
double normal_cdf(double a);

/// Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1],
/// by Lentz's continued fraction (absolute error below 1e-12).
double incomplete_beta(double a, double b, double x);

/// log Gamma(z) for complex z (Lanczos, g = 7, reflection for Re z < 1/2).
/// The imaginary part is only defined modulo 2 pi; exp() of the result is Gamma(z).
/// Throws std::domain_error within 1e-12 of a pole.
std::complex<double> log_gamma(std::complex<double> z);

}  // namespace weylhull
