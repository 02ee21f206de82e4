#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "weylhull/absorption.hpp"
#include "weylhull/exact_linalg.hpp"
#include "weylhull/hull.hpp"
#include "weylhull/monte_carlo.hpp"
#include "weylhull/reflection.hpp"
#include "weylhull/rng.hpp"

namespace weylhull {

enum class ModelKind { gaussian, uniform_sphere, heavy_tail, lattice_simple, user_matrix };

std::string_view to_string(ModelKind kind);
ModelKind parse_model_kind(std::string_view name);

/// Increment law in R^d.
///   gaussian        standard normal vectors
///   uniform_sphere  uniform on the unit sphere
///   heavy_tail      independent coordinates sign * (U^{-2/3} - 1): symmetric, infinite variance
///   lattice_simple  +-e_j with probability 1/(2d) each
///   user_matrix     +-(a uniformly chosen column of `columns`)
struct IncrementModel {
  ModelKind kind = ModelKind::gaussian;
  long dim = 1;
  Eigen::MatrixXd columns;  // user_matrix only

  static IncrementModel of(ModelKind kind, long dim) { return {kind, dim, {}}; }
  static IncrementModel user(Eigen::MatrixXd columns);

  /// Continuous laws satisfy the general-position hypothesis almost surely.
  bool continuous() const;
  void validate() const;
};

/// d x n matrix of i.i.d. increments.
Eigen::MatrixXd sample_increments(const IncrementModel& model, long n, PhiloxStream& rng);
Eigen::MatrixXd sample_increments(const IncrementModel& model, long n, std::uint64_t seed);

/// Subtracts the column mean and pins the last column so the columns sum to
/// zero exactly. The result is still exchangeable with zero sum, which is all the
/// bridge formula needs, so any continuous law may be bridged.
Eigen::MatrixXd make_bridge(const Eigen::MatrixXd& increments);
/// Same, rejecting discrete models whose centered steps would leave the lattice.
Eigen::MatrixXd make_bridge(const IncrementModel& model, const Eigen::MatrixXd& increments);

/// Points whose hull the family's formula is about: S_1..S_{n-1} for bridges,
/// S_1..S_n for walks, plus S_n* = S_{n-1} - xi_n for type D, and the union of
/// all partial sums for joint walks. One increment block per walk.
Eigen::MatrixXd hull_points(const WalkFamily& family, const std::vector<Eigen::MatrixXd>& increments);

/// Draws the increments for one sample of `family` (bridged when needed).
std::vector<Eigen::MatrixXd> sample_family_increments(const IncrementModel& model, const WalkFamily& family,
                                                      PhiloxStream& rng);

struct SimulationOptions {
  double tol = kHullTolerance;
  std::optional<unsigned> threads;
};

struct AbsorptionEstimate {
  MCEstimate absorb;
  /// P[0 in interior of the hull]; equal to `absorb` for continuous models.
  MCEstimate interior;
};

/// Monte Carlo estimate of P[0 in hull]; points are scaled to unit length
/// before the hull test, which leaves the event unchanged.
AbsorptionEstimate estimate_absorption(const IncrementModel& model, const WalkFamily& family, std::uint64_t samples,
                                       std::uint64_t seed, const SimulationOptions& options = {});

inline constexpr long kChamberCountCap = 6;

/// Number of closed chambers g C (g in the group) that Ker A meets outside 0,
/// where A is the d x n increment matrix. For type A the kernel is intersected
/// with the sum-zero hyperplane. Kernel by SVD with rank tolerance 1e-10 sigma_max.
/// Throws std::runtime_error if A is numerically rank deficient.
long chamber_intersection_count(const Eigen::MatrixXd& increments, ReflectionType group);
/// Exact variant for rational increments (rows = coordinates).
long chamber_intersection_count(const RationalRows& increments, ReflectionType group);

/// The count that every generic draw must produce: intersected_region_count
/// of the reflection arrangement at codimension d (d + 1 for type A).
long predicted_chamber_count(ReflectionType group, long n, long d);

struct DHullCheck {
  long checked = 0;
  long mismatches = 0;
  long ambiguous = 0;
};

/// Compares Conv(S_1..S_n, S_n*) with Conv(S_1..S_n) union Conv(S_1..S_{n-1}, S_n*)
/// on `queries` random points drawn from a box around the walk.
DHullCheck d_hull_identity_check(const Eigen::MatrixXd& increments, long queries, PhiloxStream& rng,
                                 double tol = kHullTolerance);

}  // namespace weylhull
