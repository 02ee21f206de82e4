#include "weylhull/serialize.hpp"

#include <stdexcept>
#include <string>

namespace weylhull {

namespace {

BigInt parse_bigint(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a decimal string, got " + j.dump());
  BigInt v;
  if (v.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("bad integer " + j.dump());
  return v;
}

}  // namespace

Json rational_to_json(const Rational& q) {
  return Json{{"num", to_decimal(q.get_num())}, {"den", to_decimal(q.get_den())}, {"float", to_double(q)}};
}

Rational rational_from_json(const Json& j) {
  const BigInt den = parse_bigint(j.at("den"));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return make_rational(parse_bigint(j.at("num")), den);
}

Json bigints_to_json(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

std::vector<BigInt> bigints_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of decimal strings");
  std::vector<BigInt> out;
  for (const auto& e : j) out.push_back(parse_bigint(e));
  return out;
}

void to_json(Json& j, const AbsorptionResult& r) {
  j = Json{{"family", to_string(r.family.kind)},
           {"n", r.family.total_steps()},
           {"d", r.family.dim},
           {"steps", r.family.steps},
           {"absorb", rational_to_json(r.absorb)},
           {"non_absorb", rational_to_json(r.non_absorb)},
           {"within_hypotheses", r.within_hypotheses}};
}

void from_json(const Json& j, AbsorptionResult& r) {
  r.family.kind = parse_walk_kind(j.at("family").get<std::string>());
  r.family.dim = j.at("d").get<long>();
  if (j.contains("steps")) {
    r.family.steps = j.at("steps").get<std::vector<long>>();
  } else {
    r.family.steps = {j.at("n").get<long>()};
  }
  r.absorb = rational_from_json(j.at("absorb"));
  r.non_absorb = rational_from_json(j.at("non_absorb"));
  r.within_hypotheses = j.at("within_hypotheses").get<bool>();
}

void to_json(Json& j, const MCEstimate& e) {
  j = Json{{"p_hat", e.p_hat},
           {"stderr", e.stderr_},
           {"ci95", Json::array({e.ci_lo, e.ci_hi})},
           {"samples", e.samples},
           {"seed", e.seed},
           {"ambiguous_fraction", e.ambiguous_fraction}};
}

void from_json(const Json& j, MCEstimate& e) {
  j.at("p_hat").get_to(e.p_hat);
  j.at("stderr").get_to(e.stderr_);
  const auto& ci = j.at("ci95");
  if (!ci.is_array() || ci.size() != 2) throw std::invalid_argument("ci95 must be a pair");
  ci[0].get_to(e.ci_lo);
  ci[1].get_to(e.ci_hi);
  j.at("samples").get_to(e.samples);
  j.at("seed").get_to(e.seed);
  j.at("ambiguous_fraction").get_to(e.ambiguous_fraction);
}

void to_json(Json& j, const CharacteristicPolynomial& p) {
  j = Json{{"dim", p.dim}, {"a", bigints_to_json(p.a)}};
}

void from_json(const Json& j, CharacteristicPolynomial& p) {
  j.at("dim").get_to(p.dim);
  p.a = bigints_from_json(j.at("a"));
  if (p.a.size() != p.dim + 1) throw std::invalid_argument("characteristic polynomial needs dim + 1 coefficients");
}

void to_json(Json& j, const IntrinsicVolumeVector& v) {
  j = Json{{"n", v.n}, {"v", v.v}};
  if (v.is_exact()) {
    Json exact = Json::array();
    for (const auto& q : v.exact) exact.push_back(rational_to_json(q));
    j["exact"] = std::move(exact);
  }
}

void from_json(const Json& j, IntrinsicVolumeVector& v) {
  j.at("n").get_to(v.n);
  j.at("v").get_to(v.v);
  v.exact.clear();
  if (j.contains("exact")) {
    for (const auto& q : j.at("exact")) v.exact.push_back(rational_from_json(q));
  }
  if (v.v.size() != v.n + 1 || (!v.exact.empty() && v.exact.size() != v.n + 1)) {
    throw std::invalid_argument("intrinsic volume vector needs n + 1 entries");
  }
}

void to_json(Json& j, const AsymptoticRow& r) {
  j = Json{{"n", r.n}, {"d", r.d}, {"exact_float", r.exact_float}, {"asymptotic", r.asymptotic}, {"ratio", r.ratio}};
}

void from_json(const Json& j, AsymptoticRow& r) {
  j.at("n").get_to(r.n);
  j.at("d").get_to(r.d);
  j.at("exact_float").get_to(r.exact_float);
  j.at("asymptotic").get_to(r.asymptotic);
  j.at("ratio").get_to(r.ratio);
}

}  // namespace weylhull
