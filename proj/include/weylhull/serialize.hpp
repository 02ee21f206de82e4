#pragma once

#include <vector>

#include <json.hpp>

#include "weylhull/absorption.hpp"
#include "weylhull/arrangement.hpp"
#include "weylhull/asymptotics.hpp"
#include "weylhull/bigint.hpp"
#include "weylhull/cones.hpp"
#include "weylhull/monte_carlo.hpp"

namespace weylhull {

using Json = nlohmann::ordered_json;

/// {num, den, float}; num and den are decimal strings so nothing is truncated.
Json rational_to_json(const Rational& q);
/// Reads num/den and ignores the float rendering. Throws std::invalid_argument on bad input.
Rational rational_from_json(const Json& j);

Json bigints_to_json(const std::vector<BigInt>& values);
std::vector<BigInt> bigints_from_json(const Json& j);

/// {family, n, d, steps, absorb, non_absorb, within_hypotheses}; `steps` lists
/// every walk length (n is their sum).
void to_json(Json& j, const AbsorptionResult& r);
void from_json(const Json& j, AbsorptionResult& r);

/// {p_hat, stderr, ci_lo, ci_hi, samples, seed, ambiguous_fraction}
void to_json(Json& j, const MCEstimate& e);
void from_json(const Json& j, MCEstimate& e);

/// {dim, a}; a as decimal strings.
void to_json(Json& j, const CharacteristicPolynomial& p);
void from_json(const Json& j, CharacteristicPolynomial& p);

/// {n, v, exact?}; `exact` (list of rationals) only for exact vectors.
void to_json(Json& j, const IntrinsicVolumeVector& v);
void from_json(const Json& j, IntrinsicVolumeVector& v);

/// {n, d, exact_float, asymptotic, ratio}
void to_json(Json& j, const AsymptoticRow& r);
void from_json(const Json& j, AsymptoticRow& r);

}  // namespace weylhull
