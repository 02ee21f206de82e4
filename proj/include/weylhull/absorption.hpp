#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "weylhull/bigint.hpp"

namespace weylhull {

enum class WalkKind { bridge_a, walk_b, walk_d, joint_b, wendel };

std::string_view to_string(WalkKind kind);
WalkKind parse_walk_kind(std::string_view name);

/// Walk or bridge family in dimension d. `steps` holds n for the single-walk
/// kinds, (n_1..n_r) for joint-B, and r ones for Wendel's i.i.d. sample.
struct WalkFamily {
  WalkKind kind = WalkKind::walk_b;
  std::vector<long> steps;
  long dim = 1;

  static WalkFamily bridge_a(long n, long d) { return {WalkKind::bridge_a, {n}, d}; }
  static WalkFamily walk_b(long n, long d) { return {WalkKind::walk_b, {n}, d}; }
  static WalkFamily walk_d(long n, long d) { return {WalkKind::walk_d, {n}, d}; }
  static WalkFamily joint_b(std::vector<long> ns, long d) { return {WalkKind::joint_b, std::move(ns), d}; }
  static WalkFamily wendel(long r, long d) {
    return {WalkKind::wendel, std::vector<long>(static_cast<std::size_t>(r > 0 ? r : 0), 1), d};
  }

  long total_steps() const;
  /// Step-count hypothesis of the matching exact formula.
  bool within_hypotheses() const;
  /// Throws std::invalid_argument on nonpositive n/d or structurally empty families.
  void validate() const;

  friend bool operator==(const WalkFamily&, const WalkFamily&) = default;
};

struct AbsorptionResult {
  Rational absorb;
  Rational non_absorb;
  WalkFamily family;
  bool within_hypotheses = true;

  friend bool operator==(const AbsorptionResult&, const AbsorptionResult&) = default;
};

/// Exact P[0 in hull] and its complement, from the odd/even tails of the
/// family's coefficient row. Outside the theorem's step-count hypothesis the
/// formula is still evaluated and `within_hypotheses` is cleared.
AbsorptionResult absorption_probability(const WalkFamily& family);

/// Non-absorption via the even-tail sum; checked against 1 - absorb, throws
/// std::logic_error if the two disagree.
Rational non_absorption_probability(const WalkFamily& family);

/// (1/2^{r-1}) sum_{k<d} C(r-1, k).
Rational wendel_probability(long r, long d);

enum class OneDimReference { sparre_positive, bridge_sign, simple_walk_positive, simple_bridge_sign };

std::string_view to_string(OneDimReference kind);
OneDimReference parse_one_dim_reference(std::string_view name);

Rational one_dimensional_reference(OneDimReference kind, long n);

struct FloatAbsorption {
  double absorb = 0.0;
  double non_absorb = 0.0;
};

/// Both tails evaluated in double precision from a truncated Poisson-binomial
/// DP; each side is summed directly so small tails keep relative accuracy.
FloatAbsorption absorption_probabilities_float(const WalkFamily& family);

inline double absorption_probability_float(const WalkFamily& family) {
  return absorption_probabilities_float(family).absorb;
}

}  // namespace weylhull
