#include "weylhull/absorption.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "weylhull/combinatorics.hpp"

namespace weylhull {

std::string_view to_string(WalkKind kind) {
  switch (kind) {
    case WalkKind::bridge_a: return "bridge-A";
    case WalkKind::walk_b: return "walk-B";
    case WalkKind::walk_d: return "walk-D";
    case WalkKind::joint_b: return "joint-B";
    case WalkKind::wendel: return "wendel";
  }
  return "?";
}

WalkKind parse_walk_kind(std::string_view name) {
  for (auto k : {WalkKind::bridge_a, WalkKind::walk_b, WalkKind::walk_d, WalkKind::joint_b, WalkKind::wendel}) {
    if (name == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown walk family '" + std::string(name) + "'");
}

long WalkFamily::total_steps() const { return std::accumulate(steps.begin(), steps.end(), 0L); }

void WalkFamily::validate() const {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  if (steps.empty()) throw std::invalid_argument("step list is empty");
  for (long n : steps) {
    if (n < 1) throw std::invalid_argument("step counts must be positive");
  }
  const bool single = kind == WalkKind::bridge_a || kind == WalkKind::walk_b || kind == WalkKind::walk_d;
  if (single && steps.size() != 1) throw std::invalid_argument("single-walk family takes one step count");
  if (kind == WalkKind::wendel && !std::all_of(steps.begin(), steps.end(), [](long n) { return n == 1; })) {
    throw std::invalid_argument("wendel family has unit steps");
  }
  // These rows are degenerate below n = 2 (the parity identities need a root at t = 1).
  if (kind == WalkKind::bridge_a && steps[0] < 2) throw std::invalid_argument("bridge-A needs n >= 2");
  if (kind == WalkKind::walk_d && steps[0] < 2) throw std::invalid_argument("walk-D needs n >= 2");
}

bool WalkFamily::within_hypotheses() const {
  const long n = total_steps();
  switch (kind) {
    case WalkKind::bridge_a: return n >= dim + 1;
    case WalkKind::walk_b: return n >= dim;
    case WalkKind::walk_d: return n >= std::max(2L, dim);
    case WalkKind::joint_b:
    case WalkKind::wendel: return n >= dim;
  }
  return false;
}

namespace {

struct RowAndGroup {
  CoefficientVector row;
  BigInt group_order;
  // Absorption uses indices shift, shift+2, ...; non-absorption shift-2, shift-4, ...
  long shift;
};

RowAndGroup row_for(const WalkFamily& f) {
  const long n = f.steps[0];
  const long d = f.dim;
  switch (f.kind) {
    case WalkKind::bridge_a:
      return {*coefficient_row(RowFamily::stirling, n), factorial(static_cast<unsigned long>(n)), d + 2};
    case WalkKind::walk_b:
      return {*coefficient_row(RowFamily::b_analog, n),
              pow2(static_cast<unsigned long>(n)) * factorial(static_cast<unsigned long>(n)), d + 1};
    case WalkKind::walk_d:
      return {*coefficient_row(RowFamily::d_analog, n),
              pow2(static_cast<unsigned long>(n - 1)) * factorial(static_cast<unsigned long>(n)), d + 1};
    case WalkKind::joint_b:
    case WalkKind::wendel: {
      if (f.total_steps() > exact_row_cap()) throw std::out_of_range("joint-B: total steps exceed exact cap");
      BigInt order = 1;
      for (long ni : f.steps) order *= pow2(static_cast<unsigned long>(ni)) * factorial(static_cast<unsigned long>(ni));
      return {product_coefficients(f.steps), order, d + 1};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

AbsorptionResult absorption_probability(const WalkFamily& family) {
  family.validate();
  const auto r = row_for(family);
  AbsorptionResult out;
  out.family = family;
  out.within_hypotheses = family.within_hypotheses();
  out.absorb = make_rational(2 * r.row.parity_tail(r.shift), r.group_order);
  out.non_absorb = 1 - out.absorb;
  return out;
}

Rational non_absorption_probability(const WalkFamily& family) {
  family.validate();
  const auto r = row_for(family);
  Rational even_route = make_rational(2 * r.row.parity_head(r.shift - 2), r.group_order);
  Rational complement = 1 - make_rational(2 * r.row.parity_tail(r.shift), r.group_order);
  if (even_route != complement) {
    throw std::logic_error("non-absorption routes disagree: " + even_route.get_str() + " vs " +
                           complement.get_str());
  }
  return even_route;
}

Rational wendel_probability(long r, long d) {
  if (r < 1 || d < 1) throw std::invalid_argument("wendel_probability: r and d must be positive");
  BigInt s = 0;
  for (long k = 0; k <= d - 1; ++k) s += binomial(r - 1, k);
  return make_rational(s, pow2(static_cast<unsigned long>(r - 1)));
}

std::string_view to_string(OneDimReference kind) {
  switch (kind) {
    case OneDimReference::sparre_positive: return "sparre-positive";
    case OneDimReference::bridge_sign: return "bridge-sign";
    case OneDimReference::simple_walk_positive: return "simple-walk-positive";
    case OneDimReference::simple_bridge_sign: return "simple-bridge-sign";
  }
  return "?";
}

OneDimReference parse_one_dim_reference(std::string_view name) {
  for (auto k : {OneDimReference::sparre_positive, OneDimReference::bridge_sign,
                 OneDimReference::simple_walk_positive, OneDimReference::simple_bridge_sign}) {
    if (name == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown reference '" + std::string(name) + "'");
}

Rational one_dimensional_reference(OneDimReference kind, long n) {
  if (n < 1) throw std::invalid_argument("one_dimensional_reference: n must be positive");
  switch (kind) {
    case OneDimReference::sparre_positive:
      return make_rational(binomial(2 * n, n), pow2(static_cast<unsigned long>(2 * n)));
    case OneDimReference::bridge_sign:
      return make_rational(2, n);
    case OneDimReference::simple_walk_positive:
      return make_rational(binomial(n - 1, (n - 1) / 2), pow2(static_cast<unsigned long>(n)));
    case OneDimReference::simple_bridge_sign:
      if (n < 2 || n % 2 != 0) throw std::invalid_argument("simple-bridge-sign needs even n >= 2");
      return make_rational(1, n - 1);
  }
  throw std::logic_error("unreachable");
}

FloatAbsorption absorption_probabilities_float(const WalkFamily& family) {
  family.validate();
  std::vector<double> probs;
  long shift = family.dim + 1;
  switch (family.kind) {
    case WalkKind::bridge_a:
      probs = row_bernoulli_probs(RowFamily::stirling, family.steps[0]);
      shift = family.dim + 2;
      break;
    case WalkKind::walk_b:
      probs = row_bernoulli_probs(RowFamily::b_analog, family.steps[0]);
      break;
    case WalkKind::walk_d:
      probs = row_bernoulli_probs(RowFamily::d_analog, family.steps[0]);
      break;
    case WalkKind::joint_b:
    case WalkKind::wendel:
      for (long ni : family.steps) {
        auto p = row_bernoulli_probs(RowFamily::b_analog, ni);
        probs.insert(probs.end(), p.begin(), p.end());
      }
      break;
  }
  const double mean = std::accumulate(probs.begin(), probs.end(), 0.0);
  // Poisson-binomial tails beyond mean + 80 + 2 mean are far below double resolution.
  const long top = shift + 80 + 3 * static_cast<long>(std::ceil(mean));
  const auto head = poisson_binomial_head(probs, top);
  const long last = static_cast<long>(head.size()) - 1;

  FloatAbsorption out;
  for (long k = shift; k <= last; k += 2) out.absorb += head[static_cast<std::size_t>(k)];
  long start = shift - 2;
  if (start > last) start -= ((start - last + 1) / 2) * 2;
  for (long k = start; k >= 0; k -= 2) out.non_absorb += head[static_cast<std::size_t>(k)];
  out.absorb *= 2.0;
  out.non_absorb *= 2.0;
  return out;
}

}  // namespace weylhull
