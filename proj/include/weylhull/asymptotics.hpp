#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include "weylhull/absorption.hpp"
#include "weylhull/reflection.hpp"

namespace weylhull {

/// 1 for type A (bridges), 1/2 for types B and D (walks).
double regime_u(ReflectionType type);

/// (type, n, d) together with the derived scale parameters.
struct RegimeQuery {
  ReflectionType type = ReflectionType::B;
  double n = 3.0;
  long d = 1;

  double u() const { return regime_u(type); }
  /// u log n, the mean scale of the underlying Poisson-binomial count.
  double scale() const;
  /// CLT location a = (d - u log n) / sqrt(u log n).
  double a() const;
  /// Large-deviation parameter x_n = d / (u log n).
  double x() const;
};

/// Family whose absorption probability the regime formulas describe:
/// A -> bridge-A, B -> walk-B, D -> walk-D.
WalkFamily regime_family(ReflectionType type, long n, long d);

/// Float-mode P[0 in hull] and its complement for regime_family(type, n, d).
FloatAbsorption regime_probabilities(ReflectionType type, long n, long d);

/// Leading term of P[0 not in hull] for fixed d >= 2 and n -> infinity.
///   A:   2 (log n)^{d-1} / ((d-1)! n)
///   B/D: (log n)^{d-1} / (2^{d-2} (d-1)! sqrt(pi n))
double fixed_dimension_asymptotic(ReflectionType type, double n, long d);

/// Phi(a) with a = (d - u log n)/sqrt(u log n); approximates P[0 not in hull].
double clt_approximation(ReflectionType type, double n, long d);

/// 2^{e^z} Gamma(e^z/2) / (2 sqrt(pi) Gamma(e^z)), which equals 1/Gamma((e^z+1)/2).
double mod_poisson_limit(double z);
std::complex<double> mod_poisson_limit(std::complex<double> z);

/// E[e^{z X_n}] / e^{(u log n)(e^z - 1)} for the Poisson-binomial count X_n
/// behind the type's coefficient row (1/i for A, 1/(2i) for B and D).
double mod_poisson_ratio(ReflectionType type, long n, double z);

enum class ProbabilitySide { absorb, non_absorb };
std::string_view to_string(ProbabilitySide side);

/// `published` uses L(x)/|1 - x^{2u}| with L_B(x) = 2^x sqrt(x) Gamma(x/2)/(sqrt(pi) Gamma(x)).
/// `corrected` replaces the B/D prefactor by 2^x x Gamma(x/2)/(sqrt(pi) Gamma(x) |1 - x^2|);
/// the A prefactor 2/(Gamma(x) |1 - x^2|) is the same in both.
enum class LdPrefactor { corrected, published };

inline constexpr double kLargeDeviationGuard = 0.05;

struct LargeDeviation {
  double value = 0.0;
  ProbabilitySide side = ProbabilitySide::non_absorb;
  double x = 0.0;
};

/// n^{-u(x log x - x + 1)} / sqrt(2 pi x u log n) * prefactor(x), with x = x_n.
/// Approximates P[0 not in hull] for x < 1 and P[0 in hull] for x > 1.
/// Throws std::domain_error when |x - 1| <= kLargeDeviationGuard.
LargeDeviation large_deviation_asymptotic(ReflectionType type, double n, long d,
                                          LdPrefactor prefactor = LdPrefactor::corrected);

/// e^{d/u}: where the absorption probability crosses 1/2.
double phase_boundary(ReflectionType type, long d);

enum class Regime { fixed_dimension, clt, large_deviation };
std::string_view to_string(Regime regime);
Regime parse_regime(std::string_view name);

struct AsymptoticRow {
  long n = 0;
  long d = 0;
  double exact_float = 0.0;
  double asymptotic = 0.0;
  double ratio = 0.0;
};

/// One row per n. `param` is d for fixed_dimension, a for clt
/// (d = round(u log n + a sqrt(u log n))) and x for large_deviation
/// (d = round(x u log n)). The exact side is the one the formula approximates.
std::vector<AsymptoticRow> asymptotic_table(Regime regime, ReflectionType type, const std::vector<long>& ns,
                                            double param, LdPrefactor prefactor = LdPrefactor::corrected);

/// |r_i - 1| strictly decreasing along the whole sequence.
bool ratio_error_decreasing(const std::vector<AsymptoticRow>& rows);

struct PowerFit {
  double c = 0.0;
  double delta = 0.0;
};

/// Least-squares slope -delta of log P[0 not in hull] against log n over `ns`, with C
/// the smallest constant making C n^{-delta} an upper bound at every sampled n
/// (rows with a zero probability are skipped).
PowerFit fit_power_decay(ReflectionType type, long d, const std::vector<long>& ns);

}  // namespace weylhull
