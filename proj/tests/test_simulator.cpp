#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "weylhull/absorption.hpp"
#include "weylhull/simulator.hpp"

using namespace weylhull;

TEST_CASE("Philox4x32-10 known answers") {
  using Block = std::array<std::uint32_t, 4>;
  CHECK(PhiloxStream::block({0, 0, 0, 0}, {0, 0}) == Block{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
  CHECK(PhiloxStream::block({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu}) ==
        Block{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
  CHECK(PhiloxStream::block({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u}) ==
        Block{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("streams are reproducible and distinct") {
  PhiloxStream a(42, 0), b(42, 0), c(42, 1), d(43, 0);
  const auto x = a();
  CHECK(x == b());
  CHECK(x != c());
  CHECK(x != d());
  PhiloxStream u(1, 0);
  for (int i = 0; i < 1000; ++i) {
    const double v = u.uniform_open();
    CHECK(v > 0.0);
    CHECK(v < 1.0);
    CHECK(u.below(7) < 7);
  }
}

TEST_CASE("increment models") {
  const auto g1 = sample_increments(IncrementModel::of(ModelKind::gaussian, 2), 5, 1);
  const auto g2 = sample_increments(IncrementModel::of(ModelKind::gaussian, 2), 5, 1);
  CHECK(g1.rows() == 2);
  CHECK(g1.cols() == 5);
  CHECK(g1 == g2);

  const auto s = sample_increments(IncrementModel::of(ModelKind::uniform_sphere, 4), 50, 2);
  for (Eigen::Index j = 0; j < s.cols(); ++j) CHECK(std::abs(s.col(j).norm() - 1.0) <= 1e-12);

  const auto l = sample_increments(IncrementModel::of(ModelKind::lattice_simple, 2), 200, 3);
  for (Eigen::Index j = 0; j < l.cols(); ++j) {
    CHECK(l.col(j).cwiseAbs().sum() == 1.0);
    CHECK(l.col(j).cwiseAbs().maxCoeff() == 1.0);
  }

  Eigen::MatrixXd m(2, 2);
  m << 1, 0, 0, 2;
  const auto um = IncrementModel::user(m);
  const auto u = sample_increments(um, 100, 4);
  for (Eigen::Index j = 0; j < u.cols(); ++j) {
    const bool first = std::abs(u(0, j)) == 1 && u(1, j) == 0;
    const bool second = u(0, j) == 0 && std::abs(u(1, j)) == 2;
    CHECK((first || second));
  }
  CHECK(parse_model_kind("heavy-tail") == ModelKind::heavy_tail);
  CHECK_THROWS_AS(parse_model_kind("cauchy"), std::invalid_argument);
  CHECK_FALSE(IncrementModel::of(ModelKind::lattice_simple, 2).continuous());
}

TEST_CASE("bridges sum to zero") {
  const auto inc = sample_increments(IncrementModel::of(ModelKind::gaussian, 3), 4, 9);
  const auto b = make_bridge(inc);
  CHECK(b.rowwise().sum().cwiseAbs().maxCoeff() <= 1e-14);
  const auto h = sample_increments(IncrementModel::of(ModelKind::heavy_tail, 2), 30, 9);
  CHECK(make_bridge(h).rowwise().sum().cwiseAbs().maxCoeff() <= 1e-9 * h.cwiseAbs().maxCoeff());
  CHECK_THROWS(make_bridge(IncrementModel::of(ModelKind::lattice_simple, 2),
                           sample_increments(IncrementModel::of(ModelKind::lattice_simple, 2), 3, 1)));
}

TEST_CASE("absorption estimates match exact values") {
  const auto e1 = estimate_absorption(IncrementModel::of(ModelKind::gaussian, 1), WalkFamily::walk_b(3, 1), 100000, 42);
  CHECK(std::abs(e1.absorb.p_hat - 0.375) <= 4 * e1.absorb.stderr_);
  CHECK(e1.absorb.stderr_ == doctest::Approx(std::sqrt(e1.absorb.p_hat * (1 - e1.absorb.p_hat) / 100000)));
  CHECK(e1.absorb.ci_lo < e1.absorb.p_hat);
  CHECK(e1.absorb.ci_hi > e1.absorb.p_hat);

  const auto e2 =
      estimate_absorption(IncrementModel::of(ModelKind::uniform_sphere, 2), WalkFamily::walk_b(4, 2), 100000, 43);
  CHECK(std::abs(e2.absorb.p_hat - 1.0 / 12.0) <= 4 * e2.absorb.stderr_);

  const auto fam = WalkFamily::bridge_a(10, 2);
  const double exact = to_double(absorption_probability(fam).absorb);
  const auto e3 = estimate_absorption(IncrementModel::of(ModelKind::gaussian, 2), fam, 100000, 44);
  CHECK(std::abs(e3.absorb.p_hat - exact) <= 4 * e3.absorb.stderr_);

  for (auto f : {WalkFamily::walk_d(5, 2), WalkFamily::joint_b({2, 3}, 2), WalkFamily::wendel(5, 3)}) {
    const auto e = estimate_absorption(IncrementModel::of(ModelKind::heavy_tail, f.dim), f, 40000, 45);
    CHECK(std::abs(e.absorb.p_hat - to_double(absorption_probability(f).absorb)) <= 4 * e.absorb.stderr_);
  }
}

TEST_CASE("output does not depend on thread count") {
  const auto model = IncrementModel::of(ModelKind::gaussian, 2);
  const auto fam = WalkFamily::walk_b(8, 2);
  SimulationOptions one, many;
  one.threads = 1;
  many.threads = 6;
  CHECK(estimate_absorption(model, fam, 5000, 7, one).absorb == estimate_absorption(model, fam, 5000, 7, many).absorb);
}

TEST_CASE("lattice walks respect the one-sided bound") {
  const auto fam = WalkFamily::walk_b(10, 2);
  const auto e = estimate_absorption(IncrementModel::of(ModelKind::lattice_simple, 2), fam, 50000, 46);
  const double generic = to_double(absorption_probability(fam).absorb);
  CHECK(e.absorb.p_hat >= generic - 4 * e.absorb.stderr_);
  CHECK(e.interior.p_hat <= generic + 4 * e.interior.stderr_);
  CHECK(e.interior.p_hat <= e.absorb.p_hat);
}

TEST_CASE("kernel meets a constant number of chambers") {
  PhiloxStream rng(12, 0);
  const auto g = IncrementModel::of(ModelKind::gaussian, 1);
  for (int i = 0; i < 5; ++i) {
    CHECK(chamber_intersection_count(sample_increments(g, 3, rng), ReflectionType::B) == 18);
    CHECK(chamber_intersection_count(make_bridge(sample_increments(g, 3, rng)), ReflectionType::A) == 2);
    CHECK(chamber_intersection_count(sample_increments(IncrementModel::of(ModelKind::gaussian, 2), 4, rng),
                                     ReflectionType::B) == 32);
  }
  CHECK(predicted_chamber_count(ReflectionType::B, 3, 1) == 18);
  CHECK(predicted_chamber_count(ReflectionType::A, 3, 1) == 2);
  CHECK(predicted_chamber_count(ReflectionType::B, 4, 2) == 32);
}

TEST_CASE("type D hull identity") {
  PhiloxStream rng(13, 0);
  for (int i = 0; i < 5; ++i) {
    const auto inc = sample_increments(IncrementModel::of(ModelKind::gaussian, 2), 5, rng);
    const auto r = d_hull_identity_check(inc, 200, rng);
    CHECK(r.mismatches == 0);
    CHECK(r.checked > 0);
  }
}

TEST_CASE("thread count resolution") {
  CHECK(resolve_threads(3) == 3);
  setenv("WEYLHULL_THREADS", "2", 1);
  CHECK(resolve_threads(std::nullopt) == 2);
  CHECK(resolve_threads(5) == 5);
  unsetenv("WEYLHULL_THREADS");
  CHECK(resolve_threads(std::nullopt) >= 1);
}
