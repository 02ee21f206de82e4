#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylhull/absorption.hpp"
#include "weylhull/combinatorics.hpp"

using namespace weylhull;

namespace {

Rational q(long a, long b) { return make_rational(a, b); }

}  // namespace

TEST_CASE("exact absorption values") {
  CHECK(absorption_probability(WalkFamily::walk_b(2, 1)).absorb == q(1, 4));
  CHECK(absorption_probability(WalkFamily::bridge_a(3, 1)).absorb == q(1, 3));
  CHECK(absorption_probability(WalkFamily::walk_b(4, 2)).non_absorb == q(11, 12));
  CHECK(absorption_probability(WalkFamily::walk_d(2, 1)).absorb == q(1, 2));
  CHECK(absorption_probability(WalkFamily::joint_b({1, 1, 1}, 2)).non_absorb == q(3, 4));
  CHECK(absorption_probability(WalkFamily::walk_b(3, 1)).absorb == q(3, 8));
}

TEST_CASE("non-absorption") {
  CHECK(non_absorption_probability(WalkFamily::walk_b(3, 1)) == q(5, 8));
  CHECK(non_absorption_probability(WalkFamily::bridge_a(4, 2)) == q(11, 12));
  for (long n = 1; n <= 6; ++n) {
    const auto r = absorption_probability(WalkFamily::walk_b(n, n));
    CHECK(r.absorb == 0);
    CHECK(r.non_absorb == 1);
  }
  for (long n = 2; n <= 15; ++n) {
    for (long d = 1; d <= n; ++d) {
      const auto r = absorption_probability(WalkFamily::walk_d(n, d));
      CHECK(r.absorb + r.non_absorb == 1);
      CHECK(non_absorption_probability(WalkFamily::walk_d(n, d)) == r.non_absorb);
    }
  }
}

TEST_CASE("one-dimensional identities") {
  for (long n = 2; n <= 25; ++n) {
    CHECK(absorption_probability(WalkFamily::walk_b(n, 1)).non_absorb == 2 * make_rational(binomial(2 * n, n), pow2(2 * n)));
    CHECK(absorption_probability(WalkFamily::bridge_a(n, 1)).non_absorb == q(2, n));
  }
  CHECK(absorption_probability(WalkFamily::walk_b(1, 1)).non_absorb == 1);
}

TEST_CASE("Wendel") {
  CHECK(wendel_probability(3, 2) == q(3, 4));
  for (long d = 1; d <= 8; ++d) CHECK(wendel_probability(d, d) == 1);
  CHECK(wendel_probability(6, 3) == q(1, 2));
  for (long r = 1; r <= 12; ++r) {
    for (long d = 1; d <= r; ++d) {
      CHECK(absorption_probability(WalkFamily::wendel(r, d)).non_absorb == wendel_probability(r, d));
      CHECK(absorption_probability(WalkFamily::joint_b(std::vector<long>(r, 1), d)).non_absorb ==
            wendel_probability(r, d));
    }
  }
}

TEST_CASE("one-dimensional references") {
  CHECK(one_dimensional_reference(OneDimReference::sparre_positive, 2) == q(3, 8));
  CHECK(one_dimensional_reference(OneDimReference::simple_walk_positive, 3) == q(1, 4));
  CHECK(one_dimensional_reference(OneDimReference::simple_bridge_sign, 4) == q(1, 3));
  CHECK(absorption_probability(WalkFamily::walk_b(3, 1)).non_absorb ==
        2 * one_dimensional_reference(OneDimReference::sparre_positive, 3));
  CHECK(parse_one_dim_reference("sparre-positive") == OneDimReference::sparre_positive);
}

TEST_CASE("float mode") {
  const auto fam = WalkFamily::walk_b(10, 2);
  const auto exact = absorption_probability(fam);
  const auto f = absorption_probabilities_float(fam);
  CHECK(std::abs(f.absorb - to_double(exact.absorb)) <= 1e-12);
  CHECK(std::abs(f.non_absorb - to_double(exact.non_absorb)) <= 1e-12);
  CHECK(absorption_probabilities_float(WalkFamily::bridge_a(3, 1)).non_absorb == doctest::Approx(2.0 / 3.0));

  const double big = absorption_probability_float(WalkFamily::walk_b(1000000, 7));
  CHECK(big > 0.0);
  CHECK(big < 1.0);

  for (auto fam2 : {WalkFamily::bridge_a(40, 3), WalkFamily::walk_d(40, 5), WalkFamily::joint_b({5, 7, 9}, 4)}) {
    const auto e = absorption_probability(fam2);
    const auto g = absorption_probabilities_float(fam2);
    CHECK(g.absorb == doctest::Approx(to_double(e.absorb)).epsilon(1e-10));
    CHECK(g.non_absorb == doctest::Approx(to_double(e.non_absorb)).epsilon(1e-10));
  }
}

TEST_CASE("hypotheses and validation") {
  CHECK(absorption_probability(WalkFamily::walk_b(5, 2)).within_hypotheses);
  CHECK_FALSE(absorption_probability(WalkFamily::walk_b(2, 4)).within_hypotheses);
  CHECK_THROWS_AS(WalkFamily::walk_b(0, 1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(WalkFamily::walk_b(3, 0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(absorption_probability(WalkFamily::joint_b({}, 2)), std::invalid_argument);
  CHECK(parse_walk_kind("walk-B") == WalkKind::walk_b);
  CHECK(to_string(WalkKind::bridge_a) == "bridge-A");
  CHECK_THROWS_AS(parse_walk_kind("walk-C"), std::invalid_argument);
}
