#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "weylhull/arrangement.hpp"
#include "weylhull/cones.hpp"
#include "weylhull/rng.hpp"

using namespace weylhull;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

IntegerVector iv(std::initializer_list<long> xs) { return ints(xs); }

Subspace span(std::size_t ambient, std::initializer_list<std::initializer_list<long>> vs) {
  Subspace L;
  L.ambient = ambient;
  for (const auto& v : vs) {
    RationalVector r;
    for (long x : v) r.emplace_back(x);
    L.basis.push_back(r);
  }
  return L;
}

}  // namespace

TEST_CASE("reflection arrangements") {
  const auto b2 = build_reflection_arrangement(ReflectionType::B, 2);
  CHECK(b2.size() == 4);
  std::set<Hyperplane> expected{Hyperplane(iv({1, 0})), Hyperplane(iv({0, 1})), Hyperplane(iv({1, -1})),
                                Hyperplane(iv({1, 1}))};
  CHECK(std::set<Hyperplane>(b2.hyperplanes().begin(), b2.hyperplanes().end()) == expected);
  CHECK(build_reflection_arrangement(ReflectionType::A, 3).size() == 3);
  CHECK(build_reflection_arrangement(ReflectionType::A, 3).dim() == 3);
  CHECK(build_reflection_arrangement(ReflectionType::D, 3).size() == 6);
}

TEST_CASE("hyperplanes are normalized") {
  Arrangement arr(2);
  CHECK(arr.add(iv({2, -4})));
  CHECK_FALSE(arr.add(iv({-1, 2})));
  CHECK(arr.hyperplanes()[0].normal() == iv({1, -2}));
  CHECK_THROWS_AS(Hyperplane(iv({0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(arr.add(iv({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("characteristic polynomials") {
  const auto a2 = whitney_characteristic_polynomial(build_reflection_arrangement(ReflectionType::A, 3));
  CHECK(a2.a == ints({0, 2, 3, 1}));
  CHECK(a2.signed_coeff(2) == -3);
  const auto b2 = whitney_characteristic_polynomial(build_reflection_arrangement(ReflectionType::B, 2));
  CHECK(b2.a == ints({3, 4, 1}));
  CHECK(b2.evaluate(1) == 0);
  CHECK(b2.evaluate(3) == 0);

  Arrangement lines(2);
  for (const auto& n : {iv({1, 0}), iv({0, 1}), iv({1, 1}), iv({1, 2})}) lines.add(n);
  const auto g = whitney_characteristic_polynomial(lines);
  CHECK(g.a == ints({3, 4, 1}));
  CHECK(g == generic_characteristic_polynomial(4, 2));

  CHECK(reflection_characteristic_polynomial(ReflectionType::B, 3).a == ints({15, 23, 9, 1}));
  CHECK(reflection_characteristic_polynomial(ReflectionType::A, 3).a == ints({0, 2, 3, 1}));
  CHECK(reflection_characteristic_polynomial(ReflectionType::D, 3).a == ints({6, 11, 6, 1}));
  for (auto t : {ReflectionType::A, ReflectionType::B, ReflectionType::D}) {
    for (long n = (t == ReflectionType::B ? 1 : 2); n <= 4; ++n) {
      const auto arr = build_reflection_arrangement(t, n);
      const auto w = whitney_characteristic_polynomial(arr);
      CHECK(w == reflection_characteristic_polynomial(t, n));
      CHECK(w.invariant_violations(static_cast<long>(arr.size())).empty());
    }
  }
}

TEST_CASE("region counts") {
  CHECK(zaslavsky_region_count(reflection_characteristic_polynomial(ReflectionType::B, 2)) == 8);
  CHECK(zaslavsky_region_count(reflection_characteristic_polynomial(ReflectionType::A, 3)) == 6);
  for (long n = 1; n <= 8; ++n) {
    CHECK(zaslavsky_region_count(reflection_characteristic_polynomial(ReflectionType::B, n)) ==
          pow2(n) * factorial(n));
  }
  CHECK(enumerate_regions(build_reflection_arrangement(ReflectionType::B, 2)).size() == 8);
  Arrangement one(2);
  one.add(iv({1, 3}));
  CHECK(enumerate_regions(one).size() == 2);
  CHECK(enumerate_regions(build_reflection_arrangement(ReflectionType::A, 4)).size() == 24);
}

TEST_CASE("restriction to generic subspaces") {
  const auto b3 = reflection_characteristic_polynomial(ReflectionType::B, 3);
  CHECK(restrict_characteristic_polynomial(b3, 1).a == ints({8, 9, 1}));
  CHECK(restrict_characteristic_polynomial(b3, 2).a == ints({1, 1}));
  const auto a2 = reflection_characteristic_polynomial(ReflectionType::A, 3);
  CHECK(restrict_characteristic_polynomial(a2, 1).a == ints({2, 3, 1}));

  CHECK(intersected_region_count(reflection_characteristic_polynomial(ReflectionType::B, 2), 1) == 2);
  CHECK(intersected_region_count(b3, 1) == 18);
  CHECK(intersected_region_count(reflection_characteristic_polynomial(ReflectionType::A, 4), 2) == 12);
  CHECK(intersected_region_count(b3, 0) == zaslavsky_region_count(b3));
}

TEST_CASE("subspace region counts") {
  const auto b2 = build_reflection_arrangement(ReflectionType::B, 2);
  PhiloxStream rng(3, 0);
  for (int i = 0; i < 5; ++i) {
    const auto L = Subspace::from_columns(random_grassmannian_basis(2, 1, rng));
    const auto r = count_regions_meeting_subspace(b2, L, IntersectionMode::open);
    CHECK(r.general_position);
    CHECK(r.count == 2);
    CHECK(count_regions_meeting_subspace(b2, L, IntersectionMode::closed).count == 2);
  }
  const auto diag = span(2, {{1, 1}});
  CHECK_FALSE(is_general_position(b2, diag));
  CHECK(count_regions_meeting_subspace(b2, diag, IntersectionMode::closed).count == 4);
  CHECK(count_regions_meeting_subspace(b2, diag, IntersectionMode::open).count == 0);

  // Random generic planes through the B3 arrangement.
  const auto b3 = build_reflection_arrangement(ReflectionType::B, 3);
  for (int i = 0; i < 3; ++i) {
    const auto L = Subspace::from_columns(random_grassmannian_basis(3, 2, rng));
    CHECK(count_regions_meeting_subspace(b3, L, IntersectionMode::open).count == 18);
  }
  CHECK_THROWS_AS(span(2, {{1, 1}, {2, 2}}).validate(), std::invalid_argument);
}

TEST_CASE("induced arrangement") {
  const auto b3 = build_reflection_arrangement(ReflectionType::B, 3);
  PhiloxStream rng(9, 0);
  const auto L = Subspace::from_columns(random_grassmannian_basis(3, 2, rng));
  const auto induced = induced_arrangement(b3, L);
  CHECK(induced.dim() == 2);
  CHECK(whitney_characteristic_polynomial(induced) == restrict_characteristic_polynomial(
                                                          reflection_characteristic_polynomial(ReflectionType::B, 3), 1));
}

TEST_CASE("Schlafli counts") {
  CHECK(schlafli_count(4, 2) == 8);
  CHECK(schlafli_count(3, 3) == 8);
  CHECK(schlafli_count(4, 3) == 14);
  CHECK(generic_characteristic_polynomial(4, 2).a[0] == 3);
  CHECK(zaslavsky_region_count(generic_characteristic_polynomial(6, 3)) == schlafli_count(6, 3));
}

TEST_CASE("arrangement text format") {
  std::istringstream in("# B2\ndim 2\n1 0\n0 1  # axis\n\n1 -1\n1 1\n");
  const auto arr = parse_arrangement(in);
  CHECK(arr.size() == 4);
  std::ostringstream out;
  write_arrangement(out, arr);
  std::istringstream back(out.str());
  const auto again = parse_arrangement(back);
  CHECK(again.hyperplanes() == arr.hyperplanes());

  std::istringstream missing("1 0\n");
  CHECK_THROWS_AS(parse_arrangement(missing), std::invalid_argument);
  std::istringstream width("dim 2\n1 0 0\n");
  CHECK_THROWS_AS(parse_arrangement(width), std::invalid_argument);
  std::istringstream junk("dim 2\n1 x\n");
  CHECK_THROWS_AS(parse_arrangement(junk), std::invalid_argument);
  std::istringstream zero("dim 2\n0 0\n");
  CHECK_THROWS_AS(parse_arrangement(zero), std::invalid_argument);
}
