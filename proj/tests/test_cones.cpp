#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "weylhull/arrangement.hpp"
#include "weylhull/cones.hpp"
#include "weylhull/rng.hpp"

using namespace weylhull;

namespace {

Rational q(long a, long b) { return make_rational(a, b); }

Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("group elements and chamber tiling") {
  CHECK(group_elements(ReflectionType::A, 4).size() == 24);
  CHECK(group_elements(ReflectionType::B, 3).size() == 48);
  CHECK(group_elements(ReflectionType::D, 3).size() == 24);
  CHECK(WeylChamber(ReflectionType::B, 3).group_size() == 48);
  CHECK_THROWS_AS(WeylChamber(ReflectionType::D, 1), std::invalid_argument);

  PhiloxStream rng(11, 0);
  for (auto t : {ReflectionType::A, ReflectionType::B, ReflectionType::D}) {
    const WeylChamber c(t, 3);
    const auto orbit = chamber_orbit(c);
    for (int s = 0; s < 50; ++s) {
      const Eigen::VectorXd x = random_sphere_point(3, rng);
      int hits = 0;
      for (const auto& rows : orbit) {
        bool in = true;
        for (const auto& r : rows) {
          double dot = 0;
          for (int i = 0; i < 3; ++i) dot += r[i].get_d() * x(i);
          in = in && dot >= 0;
        }
        hits += in;
      }
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("intrinsic volumes of Weyl chambers") {
  const auto b2 = weyl_intrinsic_volumes(ReflectionType::B, 2);
  CHECK(b2.exact == std::vector<Rational>{q(3, 8), q(1, 2), q(1, 8)});
  const auto a3 = weyl_intrinsic_volumes(ReflectionType::A, 3);
  CHECK(a3.exact == std::vector<Rational>{q(0, 1), q(1, 3), q(1, 2), q(1, 6)});
  for (auto t : {ReflectionType::A, ReflectionType::B, ReflectionType::D}) {
    for (long n = 2; n <= 7; ++n) {
      const auto v = weyl_intrinsic_volumes(t, n);
      CHECK(v.invariant_violations().empty());
      CHECK(*half_tail(v, 0).exact == q(1, 2));
      CHECK(*half_tail(v, 1).exact == q(1, 2));
      CHECK(*half_tail(v, n).exact == v.exact[n]);
      CHECK(klivans_swartz_check(t, n));
    }
  }
  CHECK(*half_tail(b2, 1).exact == q(1, 2));
  CHECK(*half_tail(weyl_intrinsic_volumes(ReflectionType::B, 3), 2).exact == q(3, 16));

  const auto est = IntrinsicVolumeVector::from_estimate({0.4, 0.5, 0.1});
  CHECK_FALSE(est.is_exact());
  CHECK_FALSE(half_tail(est, 0).exact.has_value());
  CHECK(half_tail(est, 0).value == doctest::Approx(0.5));
  CHECK_FALSE(IntrinsicVolumeVector::from_estimate({0.9, 0.5, 0.1}).invariant_violations(false, 1e-9).empty());
}

TEST_CASE("Steiner tail CDF") {
  const auto b2 = weyl_intrinsic_volumes(ReflectionType::B, 2);
  CHECK(steiner_tail_cdf(b2, 1.0) == doctest::Approx(1.0));
  CHECK(steiner_tail_cdf(b2, 0.0) == doctest::Approx(0.125));
  CHECK(steiner_tail_cdf_left(b2, 0.0) == doctest::Approx(0.0));
  CHECK(steiner_tail_cdf_left(b2, 1.0) == doctest::Approx(1.0 - 0.375));
  const double mid = steiner_tail_cdf(b2, 0.5);
  CHECK(mid > 0.125);
  CHECK(mid < 1.0);

  // Empirical CDF of dist^2 from sphere samples.
  const WeylChamber c(ReflectionType::B, 2);
  PhiloxStream rng(21, 0);
  const int samples = 100000;
  int below = 0;
  for (int s = 0; s < samples; ++s) below += project_onto_weyl_chamber(c, random_sphere_point(2, rng)).dist_sq <= 0.5;
  CHECK(std::abs(static_cast<double>(below) / samples - mid) <= 0.01);

  const auto ks = steiner_ks_check(WeylChamber(ReflectionType::B, 3), 20000, 4, 2);
  CHECK(ks.ks < 0.02);
  CHECK(ks.samples == 20000);
}

TEST_CASE("projection onto chambers") {
  const WeylChamber b2(ReflectionType::B, 2);
  auto p = project_onto_weyl_chamber(b2, vec({-1, 2}));
  CHECK(p.point.isApprox(vec({0, 2})));
  CHECK(p.dist_sq == doctest::Approx(1.0));
  p = project_onto_weyl_chamber(b2, vec({2, 1}));
  CHECK(p.point.isApprox(vec({1.5, 1.5})));
  CHECK(p.dist_sq == doctest::Approx(0.5));
  p = project_onto_weyl_chamber(WeylChamber(ReflectionType::B, 3), vec({3, 1, 2}));
  CHECK(p.point.isApprox(vec({2, 2, 2})));
  CHECK(p.dist_sq == doctest::Approx(2.0));

  const WeylChamber d4(ReflectionType::D, 4);
  const Eigen::VectorXd x = vec({3, -5, 1, 2});
  p = project_onto_weyl_chamber(d4, x);
  CHECK((p.point - vec({0, 0, 1, 2})).norm() <= 1e-8);
  CHECK(p.dist_sq == doctest::Approx(34.0).epsilon(1e-8));

  CHECK(isotonic_regression(vec({3, 1, 2})).isApprox(vec({2, 2, 2})));
  CHECK(isotonic_regression(vec({1, 3, 2, 4})).isApprox(vec({1, 2.5, 2.5, 4})));
}

TEST_CASE("projection satisfies the optimality conditions") {
  // p in C, x - p orthogonal to p, and <x - p, y - p> <= 0 for y in C.
  PhiloxStream rng(8, 0);
  for (auto t : {ReflectionType::A, ReflectionType::B, ReflectionType::D}) {
    const WeylChamber c(t, 4);
    for (int s = 0; s < 40; ++s) {
      Eigen::VectorXd x(4);
      for (int i = 0; i < 4; ++i) x(i) = 3.0 * rng.normal();
      const auto p = project_onto_weyl_chamber(c, x);
      CHECK(c.contains(p.point, 1e-8));
      const Eigen::VectorXd r = x - p.point;
      CHECK(std::abs(r.dot(p.point)) <= 1e-7);
      CHECK(p.dist_sq == doctest::Approx(r.squaredNorm()).epsilon(1e-9));
      for (int k = 0; k < 10; ++k) {
        Eigen::VectorXd z(4);
        for (int i = 0; i < 4; ++i) z(i) = rng.normal();
        const Eigen::VectorXd y = project_onto_weyl_chamber(c, z).point;
        CHECK(r.dot(y) <= 1e-7);
      }
    }
  }
}

TEST_CASE("cone meets subspace") {
  const WeylChamber b2(ReflectionType::B, 2);
  Eigen::MatrixXd diag(2, 1);
  diag << 1, 1;
  CHECK(cone_meets_subspace(b2.inequalities(), diag));
  Eigen::MatrixXd anti(2, 1);
  anti << 1, -1;
  CHECK_FALSE(cone_meets_subspace(b2.inequalities(), anti));
  RationalRows rows;
  for (const auto& r : b2.inequality_normals()) rows.push_back(to_rational(r));
  CHECK(cone_meets_subspace(rows, RationalRows{{Rational(1), Rational(2)}}));
  CHECK_FALSE(cone_meets_subspace(rows, RationalRows{{Rational(-1), Rational(2)}}));
}

TEST_CASE("Crofton estimates") {
  const WeylChamber b2(ReflectionType::B, 2);
  const auto e = crofton_mc_estimate(b2, 1, 40000, 17, 2);
  CHECK(std::abs(e.p_hat - 0.125) <= 4 * e.stderr_);
  CHECK(e.seed == 17);
  CHECK(crofton_mc_estimate(b2, 0, 1000, 17, 1).p_hat == doctest::Approx(0.5));
  const auto b3 = crofton_mc_estimate(WeylChamber(ReflectionType::B, 3), 1, 40000, 3, 2);
  CHECK(std::abs(b3.p_hat - 3.0 / 16.0) <= 4 * b3.stderr_);
  CHECK(crofton_mc_estimate(b2, 1, 5000, 5, 1) == crofton_mc_estimate(b2, 1, 5000, 5, 4));
}

TEST_CASE("generic-arrangement cones") {
  CHECK(schlafli_expected_volumes(4, 2) == std::vector<Rational>{q(3, 8), q(1, 2), q(1, 8)});
  for (long n = 1; n <= 5; ++n) {
    const auto v = schlafli_expected_volumes(n, n);
    for (long k = 0; k <= n; ++k) CHECK(v[k] == make_rational(binomial(n, n - k), pow2(n)));
  }
  for (long m = 3; m <= 8; ++m) {
    const auto v = schlafli_expected_volumes(m, 3);
    Rational total = 0;
    for (const auto& x : v) total += x;
    CHECK(total == 1);
  }
}

TEST_CASE("KS distance handles atoms") {
  const auto cdf = [](double x) { return x < 0 ? 0.0 : (x >= 1 ? 1.0 : 0.5 + 0.5 * x); };
  const auto left = [](double x) { return x <= 0 ? 0.0 : (x > 1 ? 1.0 : 0.5 + 0.5 * x); };
  std::vector<double> s{0.0, 0.0, 0.5, 1.0};
  CHECK(ks_distance(s, cdf, left) == doctest::Approx(0.25));
}
