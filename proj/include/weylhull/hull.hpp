#pragma once

#include <Eigen/Core>

#include "weylhull/exact_linalg.hpp"

namespace weylhull {

inline constexpr double kHullTolerance = 1e-10;

/// Outcome of testing 0 against the convex hull of the columns of a d x m matrix.
/// Inside results carry convex weights `lambda`; outside results carry a unit
/// `separator` u with min_i <u, p_i> > 0.
struct HullMembership {
  bool inside = false;
  /// Interior membership; decided exactly on integer input, equal to `inside` otherwise
  /// (boundary hits have probability zero for continuous models).
  bool interior = false;
  /// Min-norm distance in (tol, 100 tol]: reported as outside but flagged.
  bool boundary_ambiguous = false;
  /// Settled in exact rational arithmetic.
  bool exact = false;
  double distance = 0.0;
  Eigen::VectorXd lambda;
  Eigen::VectorXd separator;
};

/// Wolfe's min-norm point over conv(points); inside iff the distance is at most tol.
HullMembership min_norm_membership(const Eigen::MatrixXd& points, double tol = kHullTolerance);

/// Exact test for integer points: strict-separation LP, convex-weight LP when
/// inside, and an interior LP (0 is interior iff no nonzero u has <u, p_i> >= 0 for all i).
HullMembership exact_membership(const std::vector<IntegerVector>& points);

/// Dispatches to the exact path when every coordinate is an integer, else to Wolfe.
HullMembership origin_in_hull(const Eigen::MatrixXd& points, double tol = kHullTolerance);

/// Whether every coordinate is an integer small enough to be exact in a double.
bool is_integral(const Eigen::MatrixXd& points);

}  // namespace weylhull
