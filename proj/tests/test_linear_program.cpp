#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylhull/linear_program.hpp"

using namespace weylhull;

TEST_CASE_TEMPLATE("two-variable optimum", S, double, Rational) {
  // max x + y  s.t.  x + 2y <= 4,  3x + y <= 6,  x, y >= 0  ->  (8/5, 6/5)
  LinearProgram<S> lp(2);
  lp.objective = {S(1), S(1)};
  lp.add_row({S(1), S(2)}, Relation::less_equal, S(4));
  lp.add_row({S(3), S(1)}, Relation::less_equal, S(6));
  const auto r = solve(lp);
  REQUIRE(r.status == LpStatus::optimal);
  if constexpr (std::is_same_v<S, Rational>) {
    CHECK(r.value == make_rational(14, 5));
    CHECK(r.x[0] == make_rational(8, 5));
    CHECK(r.x[1] == make_rational(6, 5));
  } else {
    CHECK(r.value == doctest::Approx(2.8));
    CHECK(r.x[0] == doctest::Approx(1.6));
  }
}

TEST_CASE_TEMPLATE("infeasible and unbounded", S, double, Rational) {
  LinearProgram<S> bad(1);
  bad.add_row({S(1)}, Relation::greater_equal, S(2));
  bad.add_row({S(1)}, Relation::less_equal, S(1));
  CHECK(solve(bad).status == LpStatus::infeasible);

  LinearProgram<S> open(2);
  open.objective = {S(1), S(0)};
  open.add_row({S(1), S(-1)}, Relation::less_equal, S(1));
  CHECK(solve(open).status == LpStatus::unbounded);
}

TEST_CASE_TEMPLATE("equalities and bounds", S, double, Rational) {
  // max 2x - y  s.t.  x + y = 3,  -1 <= x <= 2,  y >= -5
  LinearProgram<S> lp(2);
  lp.objective = {S(2), S(-1)};
  lp.add_row({S(1), S(1)}, Relation::equal, S(3));
  lp.set_bounds(0, S(-1), S(2));
  lp.set_bounds(1, S(-5), std::nullopt);
  const auto r = solve(lp);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.x[0] == S(2));
  CHECK(r.x[1] == S(1));
  CHECK(r.value == S(3));
}

TEST_CASE("degenerate vertex does not cycle") {
  // Classic Beale example; Bland's rule terminates at value 1/20.
  LinearProgram<Rational> lp(4);
  lp.objective = {make_rational(3, 4), Rational(-150), make_rational(1, 50), Rational(-6)};
  lp.add_row({make_rational(1, 4), Rational(-60), make_rational(-1, 25), Rational(9)}, Relation::less_equal, Rational(0));
  lp.add_row({make_rational(1, 2), Rational(-90), make_rational(-1, 50), Rational(3)}, Relation::less_equal, Rational(0));
  lp.add_row({Rational(0), Rational(0), Rational(1), Rational(0)}, Relation::less_equal, Rational(1));
  const auto r = solve(lp);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == make_rational(1, 20));
}

TEST_CASE("row width is checked") {
  LinearProgram<double> lp(2);
  CHECK_THROWS_AS(lp.add_row({1.0}, Relation::less_equal, 0.0), std::invalid_argument);
}
