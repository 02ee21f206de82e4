#include "weylhull/arrangement.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "weylhull/combinatorics.hpp"
#include "weylhull/linear_program.hpp"

namespace weylhull {

Hyperplane::Hyperplane(const IntegerVector& normal) : normal_(primitive_integer_vector(normal)) {}

Arrangement::Arrangement(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("Arrangement: ambient dimension must be >= 1");
}

bool Arrangement::add(const Hyperplane& h) {
  if (h.dim() != dim_) {
    throw std::invalid_argument("Arrangement: normal of length " + std::to_string(h.dim()) +
                                " in dimension " + std::to_string(dim_));
  }
  if (std::find(planes_.begin(), planes_.end(), h) != planes_.end()) return false;
  planes_.push_back(h);
  return true;
}

long Arrangement::rank() const {
  std::vector<IntegerVector> rows;
  rows.reserve(planes_.size());
  for (const auto& h : planes_) rows.push_back(h.normal());
  return weylhull::rank(std::move(rows));
}

// ---------------------------------------------------------------------------
// Characteristic polynomials

namespace {
const BigInt kZeroCoeff(0);
}

const BigInt& CharacteristicPolynomial::coeff(long k) const {
  if (k < 0 || k >= static_cast<long>(a.size())) return kZeroCoeff;
  return a[static_cast<std::size_t>(k)];
}

BigInt CharacteristicPolynomial::signed_coeff(long k) const {
  const long n = static_cast<long>(dim);
  return ((n - k) % 2 == 0) ? coeff(k) : BigInt(-coeff(k));
}

BigInt CharacteristicPolynomial::evaluate(const BigInt& t) const {
  BigInt v = 0;
  for (long k = static_cast<long>(dim); k >= 0; --k) v = v * t + signed_coeff(k);
  return v;
}

std::vector<std::string> CharacteristicPolynomial::invariant_violations(long num_hyperplanes) const {
  std::vector<std::string> out;
  const long n = static_cast<long>(dim);
  if (a.size() != dim + 1) {
    out.push_back("coefficient count " + std::to_string(a.size()) + " != dim + 1");
    return out;
  }
  if (coeff(n) != 1) out.push_back("leading coefficient a_n = " + to_decimal(coeff(n)) + " != 1");
  if (num_hyperplanes >= 0 && coeff(n - 1) != num_hyperplanes) {
    out.push_back("a_{n-1} = " + to_decimal(coeff(n - 1)) + " != #hyperplanes " + std::to_string(num_hyperplanes));
  }
  for (long k = 0; k <= n; ++k) {
    if (coeff(k) < 0) out.push_back("a_" + std::to_string(k) + " is negative");
  }
  long peak = 0;
  while (peak < n && coeff(peak + 1) >= coeff(peak)) ++peak;
  for (long k = peak; k < n; ++k) {
    if (coeff(k + 1) > coeff(k)) {
      out.push_back("coefficients not unimodal at index " + std::to_string(k + 1));
      break;
    }
  }
  BigInt even = 0, odd = 0;
  for (long k = 0; k <= n; ++k) (k % 2 == 0 ? even : odd) += coeff(k);
  if (even != odd) out.push_back("even-index sum " + to_decimal(even) + " != odd-index sum " + to_decimal(odd));
  return out;
}

void Subspace::validate() const {
  if (basis.empty()) throw std::invalid_argument("Subspace: empty basis (the zero subspace is not supported)");
  for (const auto& v : basis) {
    if (v.size() != ambient) throw std::invalid_argument("Subspace: basis vector length != ambient dimension");
  }
  if (basis.size() > ambient || rank(basis) != static_cast<long>(basis.size())) {
    throw std::invalid_argument("Subspace: basis vectors are linearly dependent");
  }
}

Subspace Subspace::from_columns(const Eigen::MatrixXd& columns) {
  Subspace s;
  s.ambient = static_cast<std::size_t>(columns.rows());
  s.basis = to_rational_rows(columns.transpose());
  s.validate();
  return s;
}

Arrangement build_reflection_arrangement(ReflectionType type, long n) {
  check_reflection_rank(type, n);
  const auto un = static_cast<std::size_t>(n);
  Arrangement arr(un);
  auto unit = [un](std::size_t i) {
    IntegerVector v(un, BigInt(0));
    v[i] = 1;
    return v;
  };
  if (type == ReflectionType::B) {
    for (std::size_t i = 0; i < un; ++i) arr.add(unit(i));
  }
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = i + 1; j < un; ++j) {
      IntegerVector minus = unit(i);
      minus[j] = -1;
      arr.add(minus);
      if (type != ReflectionType::A) {
        IntegerVector plus = unit(i);
        plus[j] = 1;
        arr.add(plus);
      }
    }
  }
  return arr;
}

namespace {

class WhitneySum {
 public:
  explicit WhitneySum(const Arrangement& arr)
      : planes_(arr.hyperplanes()), echelon_(arr.dim()), by_rank_(arr.dim() + 1, 0) {}

  std::vector<std::int64_t> run() {
    visit(0, false);
    return by_rank_;
  }

 private:
  void visit(std::size_t i, bool odd) {
    if (i == planes_.size()) {
      by_rank_[echelon_.rank()] += odd ? -1 : 1;
      return;
    }
    visit(i + 1, odd);
    if (echelon_.try_add(planes_[i].normal())) {
      visit(i + 1, !odd);
      echelon_.pop();
    } else {
      visit(i + 1, !odd);
    }
  }

  const std::vector<Hyperplane>& planes_;
  IncrementalEchelon echelon_;
  std::vector<std::int64_t> by_rank_;
};

}  // namespace

CharacteristicPolynomial whitney_characteristic_polynomial(const Arrangement& arr, std::size_t cap) {
  if (arr.size() > cap) {
    throw std::out_of_range("whitney_characteristic_polynomial: " + std::to_string(arr.size()) +
                            " hyperplanes exceeds the cap of " + std::to_string(cap));
  }
  const auto by_rank = WhitneySum(arr).run();
  const long n = static_cast<long>(arr.dim());
  CharacteristicPolynomial chi;
  chi.dim = arr.dim();
  chi.a.assign(arr.dim() + 1, BigInt(0));
  for (long r = 0; r <= n; ++r) {
    const long k = n - r;
    // by_rank[r] is the signed coefficient of t^{n-r}
    BigInt c = static_cast<long>(by_rank[static_cast<std::size_t>(r)]);
    if ((n - k) % 2 != 0) c = -c;
    if (c < 0) throw std::logic_error("whitney_characteristic_polynomial: coefficient sign pattern violated");
    chi.a[static_cast<std::size_t>(k)] = c;
  }
  return chi;
}

CharacteristicPolynomial reflection_characteristic_polynomial(ReflectionType type, long n) {
  check_reflection_rank(type, n);
  const RowFamily family = type == ReflectionType::A   ? RowFamily::stirling
                           : type == ReflectionType::B ? RowFamily::b_analog
                                                       : RowFamily::d_analog;
  const auto row = coefficient_row(family, n);
  return {static_cast<std::size_t>(n), row->coeffs()};
}

BigInt zaslavsky_region_count(const CharacteristicPolynomial& chi) {
  BigInt s = 0;
  for (const auto& c : chi.a) s += c;
  return s;
}

CharacteristicPolynomial restrict_characteristic_polynomial(const CharacteristicPolynomial& chi, long d) {
  const long n = static_cast<long>(chi.dim);
  if (d < 1 || d > n - 1) {
    throw std::out_of_range("restrict_characteristic_polynomial: d = " + std::to_string(d) + " outside [1, " +
                            std::to_string(n - 1) + "]");
  }
  CharacteristicPolynomial out;
  out.dim = static_cast<std::size_t>(n - d);
  out.a.assign(out.dim + 1, BigInt(0));
  BigInt constant = 0;
  for (long k = 0; k <= d; ++k) constant += chi.signed_coeff(k);
  out.a[0] = abs(constant);
  for (long k = d + 1; k <= n; ++k) out.a[static_cast<std::size_t>(k - d)] = chi.coeff(k);
  return out;
}

BigInt intersected_region_count(const CharacteristicPolynomial& chi, long d) {
  const long n = static_cast<long>(chi.dim);
  if (d < 0 || d > n - 1) {
    throw std::out_of_range("intersected_region_count: d = " + std::to_string(d) + " outside [0, " +
                            std::to_string(n - 1) + "]");
  }
  BigInt s = 0;
  for (long k = d + 1; k <= n; k += 2) s += chi.coeff(k);
  return 2 * s;
}

BigInt schlafli_count(long m, long n) {
  if (n < 1 || m < n) {
    throw std::invalid_argument("schlafli_count: need m >= n >= 1, got m = " + std::to_string(m) +
                                ", n = " + std::to_string(n));
  }
  BigInt s = 0;
  for (long k = 0; k < n; ++k) s += binomial(m - 1, k);
  return 2 * s;
}

CharacteristicPolynomial generic_characteristic_polynomial(long m, long n) {
  if (n < 1 || m < 0) throw std::invalid_argument("generic_characteristic_polynomial: need n >= 1, m >= 0");
  CharacteristicPolynomial chi;
  chi.dim = static_cast<std::size_t>(n);
  chi.a.resize(chi.dim + 1);
  chi.a[0] = binomial(m - 1, n - 1);
  for (long k = 1; k <= n; ++k) chi.a[static_cast<std::size_t>(k)] = binomial(m, n - k);
  return chi;
}

// ---------------------------------------------------------------------------
// Sign-vector oracles

namespace {

// Point x in [-1,1]^dim with min_i <rows_i, x> > 0, if one exists.
std::optional<RationalVector> strict_point(const RationalRows& rows, std::size_t dim) {
  LinearProgram<Rational> lp(dim + 1);
  for (std::size_t j = 0; j < dim; ++j) lp.set_bounds(j, Rational(-1), Rational(1));
  lp.set_bounds(dim, Rational(0), Rational(1));
  lp.objective[dim] = 1;
  for (const auto& r : rows) {
    std::vector<Rational> c(r);
    c.push_back(Rational(-1));
    lp.add_row(std::move(c), Relation::greater_equal, Rational(0));
  }
  const auto res = solve(lp);
  if (res.status != LpStatus::optimal || sgn(res.value) <= 0) return std::nullopt;
  return RationalVector(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(dim));
}

RationalVector scaled(const RationalVector& v, int sign) {
  if (sign > 0) return v;
  RationalVector out(v);
  for (auto& x : out) x = -x;
  return out;
}

class SignVectorSearch {
 public:
  SignVectorSearch(const RationalRows& normals, std::size_t dim) : normals_(normals), dim_(dim) {}

  std::vector<SignVector> run() {
    if (normals_.empty()) return {SignVector{}};
    SignVector prefix;
    RationalRows rows;
    extend(prefix, rows, RationalVector(dim_, Rational(0)), false);
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  // `witness` is strictly inside the prefix region when `have_witness`.
  void extend(SignVector& prefix, RationalRows& rows, const RationalVector& witness, bool have_witness) {
    const std::size_t i = prefix.size();
    if (i == normals_.size()) {
      found_.push_back(prefix);
      return;
    }
    const int witness_sign = have_witness ? sgn(dot(normals_[i], witness)) : 0;
    for (int s : {1, -1}) {
      rows.push_back(scaled(normals_[i], s));
      prefix.push_back(static_cast<std::int8_t>(s));
      if (witness_sign == s) {
        extend(prefix, rows, witness, true);
      } else if (auto x = strict_point(rows, dim_)) {
        extend(prefix, rows, *x, true);
      }
      prefix.pop_back();
      rows.pop_back();
    }
  }

  const RationalRows& normals_;
  std::size_t dim_;
  std::vector<SignVector> found_;
};

void check_region_cap(const Arrangement& arr, std::size_t cap, const char* who) {
  if (arr.size() > cap) {
    throw std::out_of_range(std::string(who) + ": " + std::to_string(arr.size()) +
                            " hyperplanes exceeds the cap of " + std::to_string(cap));
  }
}

RationalRows normals_as_rational(const Arrangement& arr) {
  RationalRows rows;
  rows.reserve(arr.size());
  for (const auto& h : arr.hyperplanes()) rows.push_back(to_rational(h.normal()));
  return rows;
}

// Row i holds <h_i, q_j> over the basis vectors q_j of L.
RationalRows restricted_normals(const Arrangement& arr, const Subspace& L) {
  if (L.ambient != arr.dim()) throw std::invalid_argument("subspace and arrangement dimensions differ");
  L.validate();
  RationalRows g;
  g.reserve(arr.size());
  for (const auto& h : arr.hyperplanes()) {
    const auto hr = to_rational(h.normal());
    RationalVector row;
    row.reserve(L.dim());
    for (const auto& q : L.basis) row.push_back(dot(hr, q));
    g.push_back(std::move(row));
  }
  return g;
}

bool is_zero_vector(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

}  // namespace

std::vector<SignVector> enumerate_regions(const Arrangement& arr, std::size_t cap) {
  check_region_cap(arr, cap, "enumerate_regions");
  return SignVectorSearch(normals_as_rational(arr), arr.dim()).run();
}

bool is_general_position(const Arrangement& arr, const Subspace& L) {
  const RationalRows g = restricted_normals(arr, L);
  const std::size_t k = L.dim();
  std::vector<std::optional<IntegerVector>> g_int;
  g_int.reserve(g.size());
  for (const auto& row : g) {
    if (is_zero_vector(row)) g_int.emplace_back();
    else g_int.emplace_back(primitive_integer_vector(row));
  }
  // Every independent set of at most k normals must stay independent on L.
  IncrementalEchelon original(arr.dim());
  IncrementalEchelon restricted(k);
  const auto& planes = arr.hyperplanes();
  bool ok = true;
  auto visit = [&](auto&& self, std::size_t start) -> void {
    if (!ok || original.rank() == k) return;
    for (std::size_t i = start; i < planes.size() && ok; ++i) {
      if (!original.try_add(planes[i].normal())) continue;
      if (!g_int[i] || !restricted.try_add(*g_int[i])) {
        ok = false;
        original.pop();
        return;
      }
      self(self, i + 1);
      restricted.pop();
      original.pop();
    }
  };
  visit(visit, 0);
  return ok;
}

Arrangement induced_arrangement(const Arrangement& arr, const Subspace& L) {
  const RationalRows g = restricted_normals(arr, L);
  Arrangement out(L.dim());
  for (const auto& row : g) {
    if (!is_zero_vector(row)) out.add(primitive_integer_vector(row));
  }
  return out;
}

SubspaceRegionCount count_regions_meeting_subspace(const Arrangement& arr, const Subspace& L,
                                                   IntersectionMode mode, std::size_t cap) {
  check_region_cap(arr, cap, "count_regions_meeting_subspace");
  if (L.ambient != arr.dim() || L.codim() > arr.dim() - 1) {
    throw std::invalid_argument("count_regions_meeting_subspace: subspace codimension must lie in [0, n-1]");
  }
  const RationalRows g = restricted_normals(arr, L);
  const std::size_t k = L.dim();
  SubspaceRegionCount result;
  result.general_position = is_general_position(arr, L);

  if (mode == IntersectionMode::open) {
    result.count = static_cast<long>(SignVectorSearch(g, k).run().size());
    return result;
  }

  // L meets the lineality space of the arrangement iff the restricted normals are rank deficient.
  const bool meets_lineality = arr.size() == 0 || rank(g) < static_cast<long>(k);
  const auto regions = enumerate_regions(arr, cap);
  for (const auto& sigma : regions) {
    if (meets_lineality) {
      ++result.count;
      continue;
    }
    LinearProgram<Rational> lp(k);
    for (std::size_t j = 0; j < k; ++j) lp.set_bounds(j, Rational(-1), Rational(1));
    for (std::size_t i = 0; i < g.size(); ++i) {
      RationalVector row = scaled(g[i], sigma[i]);
      for (std::size_t j = 0; j < k; ++j) lp.objective[j] += row[j];
      lp.add_row(std::move(row), Relation::greater_equal, Rational(0));
    }
    const auto res = solve(lp);
    if (res.status == LpStatus::optimal && sgn(res.value) > 0) ++result.count;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Text format

Arrangement parse_arrangement(std::istream& in) {
  std::optional<Arrangement> arr;
  std::string line;
  long lineno = 0;
  auto fail = [&lineno](const std::string& msg) {
    throw std::invalid_argument("arrangement line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    for (std::string tok; ss >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (!arr) {
      if (tokens.size() != 2 || tokens[0] != "dim") fail("expected `dim n` header");
      long n = 0;
      try {
        std::size_t used = 0;
        n = std::stol(tokens[1], &used);
        if (used != tokens[1].size()) fail("bad dimension '" + tokens[1] + "'");
      } catch (const std::logic_error&) {
        fail("bad dimension '" + tokens[1] + "'");
      }
      if (n < 1) fail("dimension must be >= 1");
      arr.emplace(static_cast<std::size_t>(n));
      continue;
    }
    if (tokens.size() != arr->dim()) {
      fail("expected " + std::to_string(arr->dim()) + " integers, got " + std::to_string(tokens.size()));
    }
    IntegerVector normal;
    normal.reserve(tokens.size());
    for (const auto& tok : tokens) {
      BigInt v;
      if (v.set_str(tok, 10) != 0) fail("not an integer: '" + tok + "'");
      normal.push_back(v);
    }
    if (std::all_of(normal.begin(), normal.end(), [](const BigInt& x) { return x == 0; })) {
      fail("zero normal vector");
    }
    arr->add(normal);
  }
  if (!arr) throw std::invalid_argument("arrangement: missing `dim n` header");
  return *arr;
}

void write_arrangement(std::ostream& out, const Arrangement& arr) {
  out << "dim " << arr.dim() << '\n';
  for (const auto& h : arr.hyperplanes()) {
    for (std::size_t j = 0; j < h.dim(); ++j) out << (j ? " " : "") << to_decimal(h.normal()[j]);
    out << '\n';
  }
}

}  // namespace weylhull
