#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>

#include "weylhull/special_functions.hpp"

using namespace weylhull;

TEST_CASE("normal CDF matches a reference table") {
  // 50 points in [-6, 6.25); reference from Boost's erfc.
  for (int i = 0; i < 50; ++i) {
    const double a = -6.0 + 0.25 * i;
    const double ref = 0.5 * boost::math::erfc(-a / std::numbers::sqrt2);
    CHECK(std::abs(normal_cdf(a) - ref) <= 1e-12);
    CHECK(std::abs(normal_cdf(a) + normal_cdf(-a) - 1.0) <= 1e-14);
  }
  CHECK(normal_cdf(0.0) == 0.5);
  CHECK(normal_cdf(1.0) == doctest::Approx(0.8413447460685429).epsilon(1e-14));
}

TEST_CASE("regularized incomplete beta") {
  for (double a : {0.5, 1.0, 1.5, 2.0, 3.5}) {
    for (double b : {0.5, 1.0, 2.5, 4.0}) {
      for (double x : {0.0, 0.01, 0.2, 0.5, 0.77, 0.99, 1.0}) {
        CHECK(std::abs(incomplete_beta(a, b, x) - boost::math::ibeta(a, b, x)) <= 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(incomplete_beta(1.0, 1.0, 1.5), std::domain_error);
}

TEST_CASE("complex log-gamma") {
  for (double x : {0.1, 0.5, 1.0, 2.5, 7.0, 20.0, -0.5, -2.5}) {
    const auto lg = log_gamma({x, 0.0});
    CHECK(std::abs(std::exp(lg.real()) - std::abs(boost::math::tgamma(x))) <=
          1e-12 * std::abs(boost::math::tgamma(x)));
  }
  // |Gamma(i)|^2 = pi / sinh(pi)
  const auto gi = std::exp(log_gamma({0.0, 1.0}));
  CHECK(std::norm(gi) == doctest::Approx(std::numbers::pi / std::sinh(std::numbers::pi)).epsilon(1e-12));
  // Gamma(1/2 + i y) Gamma(1/2 - i y) = pi / cosh(pi y)
  const auto g1 = std::exp(log_gamma({0.5, 2.0}));
  CHECK(std::norm(g1) == doctest::Approx(std::numbers::pi / std::cosh(2.0 * std::numbers::pi)).epsilon(1e-12));
  CHECK_THROWS_AS(log_gamma({-2.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(log_gamma({0.0, 0.0}), std::domain_error);
}
