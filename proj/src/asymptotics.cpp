#include "weylhull/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "weylhull/combinatorics.hpp"
#include "weylhull/special_functions.hpp"

namespace weylhull {

namespace {

void check_n(double n) {
  if (!(n >= 3.0) || !std::isfinite(n)) throw std::invalid_argument("asymptotics: n must be >= 3");
}

RowFamily row_of(ReflectionType type) {
  switch (type) {
    case ReflectionType::A: return RowFamily::stirling;
    case ReflectionType::B: return RowFamily::b_analog;
    case ReflectionType::D: return RowFamily::d_analog;
  }
  throw std::invalid_argument("unknown reflection type");
}

double ld_prefactor(ReflectionType type, double x, LdPrefactor form) {
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  if (type == ReflectionType::A) return 2.0 / std::tgamma(x) / std::abs(1.0 - x * x);
  const double base = std::pow(2.0, x) * std::tgamma(x / 2.0) / (sqrt_pi * std::tgamma(x));
  if (form == LdPrefactor::published) return base * std::sqrt(x) / std::abs(1.0 - x);
  return base * x / std::abs(1.0 - x * x);
}

}  // namespace

double regime_u(ReflectionType type) { return type == ReflectionType::A ? 1.0 : 0.5; }

double RegimeQuery::scale() const {
  check_n(n);
  return u() * std::log(n);
}

double RegimeQuery::a() const {
  const double s = scale();
  return (static_cast<double>(d) - s) / std::sqrt(s);
}

double RegimeQuery::x() const { return static_cast<double>(d) / scale(); }

WalkFamily regime_family(ReflectionType type, long n, long d) {
  switch (type) {
    case ReflectionType::A: return WalkFamily::bridge_a(n, d);
    case ReflectionType::B: return WalkFamily::walk_b(n, d);
    case ReflectionType::D: return WalkFamily::walk_d(n, d);
  }
  throw std::invalid_argument("unknown reflection type");
}

FloatAbsorption regime_probabilities(ReflectionType type, long n, long d) {
  return absorption_probabilities_float(regime_family(type, n, d));
}

double fixed_dimension_asymptotic(ReflectionType type, double n, long d) {
  if (d < 2) throw std::invalid_argument("fixed_dimension_asymptotic: d must be >= 2 (d = 1 is exact)");
  check_n(n);
  const double logn = std::log(n);
  const double head = std::exp((d - 1) * std::log(logn) - std::lgamma(static_cast<double>(d)));
  if (type == ReflectionType::A) return 2.0 * head / n;
  return head / (std::ldexp(1.0, static_cast<int>(d - 2)) * std::sqrt(std::numbers::pi * n));
}

double clt_approximation(ReflectionType type, double n, long d) {
  return normal_cdf(RegimeQuery{type, n, d}.a());
}

std::complex<double> mod_poisson_limit(std::complex<double> z) {
  const std::complex<double> w = std::exp(z);
  const std::complex<double> lg = w * std::log(2.0) + log_gamma(w / 2.0) - log_gamma(w) -
                                  std::log(2.0 * std::sqrt(std::numbers::pi));
  return std::exp(lg);
}

double mod_poisson_limit(double z) {
  if (!std::isfinite(z)) throw std::invalid_argument("mod_poisson_limit: z must be finite");
  // Real form 1/Gamma((e^z+1)/2); the argument is > 1/2 so there is no pole.
  return std::exp(-std::lgamma((std::exp(z) + 1.0) / 2.0));
}

double mod_poisson_ratio(ReflectionType type, long n, double z) {
  check_n(static_cast<double>(n));
  const double w = std::expm1(z);
  double log_mgf = 0.0;
  for (double p : row_bernoulli_probs(row_of(type), n)) log_mgf += std::log1p(p * w);
  return std::exp(log_mgf - regime_u(type) * std::log(static_cast<double>(n)) * w);
}

std::string_view to_string(ProbabilitySide side) {
  return side == ProbabilitySide::absorb ? "absorb" : "non-absorb";
}

LargeDeviation large_deviation_asymptotic(ReflectionType type, double n, long d, LdPrefactor prefactor) {
  if (d < 1) throw std::invalid_argument("large_deviation_asymptotic: d must be >= 1");
  const RegimeQuery q{type, n, d};
  const double s = q.scale();
  const double x = q.x();
  if (std::abs(x - 1.0) <= kLargeDeviationGuard) {
    throw std::domain_error("large_deviation_asymptotic: x_n = " + std::to_string(x) +
                            " is within the critical window around 1; use clt_approximation");
  }
  const double rate = x * std::log(x) - x + 1.0;
  LargeDeviation out;
  out.x = x;
  out.side = x < 1.0 ? ProbabilitySide::non_absorb : ProbabilitySide::absorb;
  out.value = std::exp(-s * rate) / std::sqrt(2.0 * std::numbers::pi * x * s) * ld_prefactor(type, x, prefactor);
  return out;
}

double phase_boundary(ReflectionType type, long d) {
  if (d < 1) throw std::invalid_argument("phase_boundary: d must be >= 1");
  return std::exp(static_cast<double>(d) / regime_u(type));
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::fixed_dimension: return "fixed-d";
    case Regime::clt: return "clt";
    case Regime::large_deviation: return "large-deviation";
  }
  return "?";
}

Regime parse_regime(std::string_view name) {
  if (name == "fixed-d" || name == "fixed") return Regime::fixed_dimension;
  if (name == "clt") return Regime::clt;
  if (name == "large-deviation" || name == "ld") return Regime::large_deviation;
  throw std::invalid_argument("unknown regime '" + std::string(name) + "' (fixed-d, clt, large-deviation)");
}

std::vector<AsymptoticRow> asymptotic_table(Regime regime, ReflectionType type, const std::vector<long>& ns,
                                            double param, LdPrefactor prefactor) {
  std::vector<AsymptoticRow> rows;
  rows.reserve(ns.size());
  for (long n : ns) {
    check_n(static_cast<double>(n));
    const double s = regime_u(type) * std::log(static_cast<double>(n));
    AsymptoticRow row;
    row.n = n;
    switch (regime) {
      case Regime::fixed_dimension:
        row.d = std::lround(param);
        row.asymptotic = fixed_dimension_asymptotic(type, static_cast<double>(n), row.d);
        row.exact_float = regime_probabilities(type, n, row.d).non_absorb;
        break;
      case Regime::clt:
        row.d = std::max(1L, std::lround(s + param * std::sqrt(s)));
        row.asymptotic = normal_cdf(param);
        row.exact_float = regime_probabilities(type, n, row.d).non_absorb;
        break;
      case Regime::large_deviation: {
        row.d = std::max(1L, std::lround(param * s));
        const auto ld = large_deviation_asymptotic(type, static_cast<double>(n), row.d, prefactor);
        row.asymptotic = ld.value;
        const auto p = regime_probabilities(type, n, row.d);
        row.exact_float = ld.side == ProbabilitySide::absorb ? p.absorb : p.non_absorb;
        break;
      }
    }
    row.ratio = row.exact_float / row.asymptotic;
    rows.push_back(row);
  }
  return rows;
}

bool ratio_error_decreasing(const std::vector<AsymptoticRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(std::abs(rows[i].ratio - 1.0) < std::abs(rows[i - 1].ratio - 1.0))) return false;
  }
  return true;
}

PowerFit fit_power_decay(ReflectionType type, long d, const std::vector<long>& ns) {
  std::vector<std::pair<double, double>> pts;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  long count = 0;
  for (long n : ns) {
    const double p = regime_probabilities(type, n, d).non_absorb;
    if (!(p > 0.0)) continue;
    const double lx = std::log(static_cast<double>(n));
    const double ly = std::log(p);
    pts.emplace_back(lx, ly);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++count;
  }
  if (count < 2) throw std::invalid_argument("fit_power_decay: need two positive probabilities");
  const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  PowerFit fit;
  fit.delta = -slope;
  // Smallest C that makes the fitted curve an upper bound at every sampled n.
  double log_c = -HUGE_VAL;
  for (const auto& [lx, ly] : pts) log_c = std::max(log_c, ly + fit.delta * lx);
  fit.c = std::exp(log_c);
  return fit;
}

}  // namespace weylhull
