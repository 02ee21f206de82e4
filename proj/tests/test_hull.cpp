#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "weylhull/hull.hpp"
#include "weylhull/rng.hpp"

using namespace weylhull;

namespace {

Eigen::MatrixXd cols(std::initializer_list<std::initializer_list<double>> pts) {
  const auto d = static_cast<Eigen::Index>(pts.begin()->size());
  Eigen::MatrixXd m(d, static_cast<Eigen::Index>(pts.size()));
  Eigen::Index j = 0;
  for (const auto& p : pts) {
    Eigen::Index i = 0;
    for (double x : p) m(i++, j) = x;
    ++j;
  }
  return m;
}

std::vector<IntegerVector> ipts(std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<IntegerVector> out;
  for (const auto& p : pts) {
    IntegerVector v;
    for (long x : p) v.emplace_back(x);
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("min-norm point: outside with separator") {
  const auto r = min_norm_membership(cols({{1, 0}, {0, 1}}));
  CHECK_FALSE(r.inside);
  REQUIRE(r.separator.size() == 2);
  CHECK(r.separator(0) == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(r.separator(1) == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(r.distance == doctest::Approx(1 / std::sqrt(2.0)));
}

TEST_CASE("min-norm point: inside with weights") {
  const auto pts = cols({{1, 0}, {-1, 1}, {-1, -1}});
  const auto r = min_norm_membership(pts);
  CHECK(r.inside);
  REQUIRE(r.lambda.size() == 3);
  CHECK(r.lambda(0) == doctest::Approx(0.5));
  CHECK(r.lambda(1) == doctest::Approx(0.25));
  CHECK(r.lambda(2) == doctest::Approx(0.25));
  CHECK((pts * r.lambda).norm() <= 1e-10);
}

TEST_CASE("single point in one dimension") {
  CHECK_FALSE(min_norm_membership(cols({{1}})).inside);
  CHECK_FALSE(origin_in_hull(cols({{1}})).inside);
  CHECK(origin_in_hull(cols({{1}, {-2}})).inside);
}

TEST_CASE("certificates verify on random inputs") {
  PhiloxStream rng(5, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + trial % 3;
    const int m = 3 + trial % 7;
    Eigen::MatrixXd p(d, m);
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < d; ++i) p(i, j) = rng.normal() + 0.3;
    }
    const auto r = min_norm_membership(p);
    if (r.inside) {
      CHECK(r.lambda.minCoeff() >= -1e-12);
      CHECK(r.lambda.sum() == doctest::Approx(1.0));
      CHECK((p * r.lambda).norm() <= 1e-8);
    } else {
      CHECK(r.separator.norm() == doctest::Approx(1.0));
      CHECK((r.separator.transpose() * p).minCoeff() > 0.0);
    }
  }
}

TEST_CASE("exact membership and interior") {
  const auto cross = exact_membership(ipts({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  CHECK(cross.inside);
  CHECK(cross.interior);
  CHECK(cross.exact);

  const auto segment = exact_membership(ipts({{1, 0}, {-1, 0}}));
  CHECK(segment.inside);
  CHECK_FALSE(segment.interior);

  const auto edge = exact_membership(ipts({{1, 1}, {-1, 1}, {0, 2}}));
  CHECK_FALSE(edge.inside);

  const auto boundary = exact_membership(ipts({{1, 0}, {-1, 0}, {0, 1}}));
  CHECK(boundary.inside);
  CHECK_FALSE(boundary.interior);
}

TEST_CASE("dispatch between exact and floating paths") {
  CHECK(is_integral(cols({{1, 0}, {-3, 2}})));
  CHECK_FALSE(is_integral(cols({{1, 0.5}})));
  const auto r = origin_in_hull(cols({{1, 0}, {-1, 0}}));
  CHECK(r.exact);
  CHECK(r.inside);
  CHECK_FALSE(r.interior);
  CHECK_FALSE(origin_in_hull(cols({{1.5, 0}, {0, 1.5}})).exact);
}
