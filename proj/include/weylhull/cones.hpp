#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "weylhull/bigint.hpp"
#include "weylhull/exact_linalg.hpp"
#include "weylhull/monte_carlo.hpp"
#include "weylhull/reflection.hpp"
#include "weylhull/rng.hpp"

namespace weylhull {

/// Closed fundamental chamber {x : G x >= 0} of a reflection group acting on R^n.
///   A: x_1 <= ... <= x_n (lineality span(1, ..., 1))
///   B: 0 <= x_1 <= ... <= x_n
///   D: |x_1| <= x_2 <= ... <= x_n
struct WeylChamber {
  ReflectionType type = ReflectionType::B;
  long n = 1;

  WeylChamber() = default;
  WeylChamber(ReflectionType t, long rank);

  /// Rows of G as integer vectors.
  std::vector<IntegerVector> inequality_normals() const;
  Eigen::MatrixXd inequalities() const;
  BigInt group_size() const { return group_order(type, n); }
  bool contains(const Eigen::VectorXd& x, double tol = 1e-12) const;
};

/// x -> (sign_0 x_{perm_0}, ..., sign_{n-1} x_{perm_{n-1}}).
struct SignedPermutation {
  std::vector<int> perm;
  std::vector<int> sign;
};

/// Every element of the group: permutations (A), signed permutations (B),
/// signed permutations with an even number of sign changes (D).
std::vector<SignedPermutation> group_elements(ReflectionType type, long n);

/// Inequality normals of g C for every group element g; the cones tile R^n.
std::vector<std::vector<IntegerVector>> chamber_orbit(const WeylChamber& chamber);

/// Conic intrinsic volumes v_0..v_n, exact or estimated.
struct IntrinsicVolumeVector {
  std::size_t n = 0;
  std::vector<Rational> exact;  // empty for estimates
  std::vector<double> v;

  static IntrinsicVolumeVector from_exact(std::vector<Rational> values);
  static IntrinsicVolumeVector from_estimate(std::vector<double> values);

  bool is_exact() const { return !exact.empty(); }
  /// Sum to 1, nonnegativity, and (unless the cone is a subspace) even sum = odd sum = 1/2.
  std::vector<std::string> invariant_violations(bool cone_is_subspace = false, double tol = 1e-12) const;

  friend bool operator==(const IntrinsicVolumeVector&, const IntrinsicVolumeVector&) = default;
};

/// v_k = row_k / #G with the Stirling, B- or D-row.
IntrinsicVolumeVector weyl_intrinsic_volumes(ReflectionType type, long n);

struct HalfTailValue {
  long k = 0;
  std::optional<Rational> exact;
  double value = 0.0;
};

/// h_k = v_k + v_{k+2} + ...
HalfTailValue half_tail(const IntrinsicVolumeVector& v, long k);

/// P[dist^2(theta, C) <= lambda] for theta uniform on the sphere:
/// sum_k v_k I_lambda((n-k)/2, k/2), with the k = n term a unit step at 0 and
/// the k = 0 term a unit step at 1.
double steiner_tail_cdf(const IntrinsicVolumeVector& v, double lambda);
/// Left limit of steiner_tail_cdf at lambda.
double steiner_tail_cdf_left(const IntrinsicVolumeVector& v, double lambda);

struct Projection {
  Eigen::VectorXd point;
  double dist_sq = 0.0;
};

/// Least-squares nondecreasing fit (pool adjacent violators).
Eigen::VectorXd isotonic_regression(const Eigen::VectorXd& x);

/// Euclidean projection onto the closed chamber: PAVA for A, PAVA then
/// clamping at 0 for B, Dykstra's alternating projections for D.
Projection project_onto_weyl_chamber(const WeylChamber& chamber, const Eigen::VectorXd& x);

/// Dykstra's algorithm for {x : rows x >= 0}; stops when a sweep moves the
/// iterate by at most `tol`. Throws std::runtime_error past `max_sweeps`.
Eigen::VectorXd dykstra_project(const Eigen::MatrixXd& rows, const Eigen::VectorXd& x, double tol = 1e-10,
                                int max_sweeps = 1000000);

/// Threshold on the summed slack above which {G x >= 0} and span(Q) share a nonzero point.
inline constexpr double kIntersectionMargin = 1e-9;

/// Whether the cone {x : rows x >= 0} meets span(basis columns) outside the origin.
/// Maximizes the summed slacks of rows * basis * y over y in [-1, 1]^k; a
/// positive optimum, or a nonzero y killed by every row, certifies a common ray.
bool cone_meets_subspace(const Eigen::MatrixXd& rows, const Eigen::MatrixXd& basis,
                         double margin = kIntersectionMargin);
/// Exact variant; `basis` holds the spanning vectors as rows.
bool cone_meets_subspace(const RationalRows& rows, const RationalRows& basis);

/// Uniform point on the unit sphere in R^n.
Eigen::VectorXd random_sphere_point(long n, PhiloxStream& rng);
/// Orthonormal basis (columns) of a uniformly distributed k-dimensional subspace of R^n.
Eigen::MatrixXd random_grassmannian_basis(long n, long k, PhiloxStream& rng);

/// Estimates h_{d+1} = P[C cap W ≠ {0}] / 2 with W a uniform (n-d)-dimensional subspace.
MCEstimate crofton_mc_estimate(const WeylChamber& chamber, long d, std::uint64_t samples, std::uint64_t seed,
                               unsigned threads = 1);

/// Kolmogorov-Smirnov distance between sorted samples and a CDF with atoms.
/// Samples within 1e-12 of 0 or 1 are snapped onto those atoms.
double ks_distance(std::vector<double> sorted_samples, const std::function<double(double)>& cdf,
                   const std::function<double(double)>& cdf_left);

struct SteinerCheck {
  double ks = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// KS distance between the empirical law of dist^2(theta, C) and steiner_tail_cdf.
SteinerCheck steiner_ks_check(const WeylChamber& chamber, std::uint64_t samples, std::uint64_t seed,
                              unsigned threads = 1);

/// E v_k of the random cone cut out by m generic hyperplanes in R^n:
/// binom(m, n-k)/C(m, n) for k >= 1 and binom(m-1, n-1)/C(m, n) for k = 0.
std::vector<Rational> schlafli_expected_volumes(long m, long n);

/// #G v_k(chamber) == a_k for every k, with a_k from Whitney's sum when the
/// arrangement is small and from the closed form otherwise.
bool klivans_swartz_check(ReflectionType type, long n);

}  // namespace weylhull
