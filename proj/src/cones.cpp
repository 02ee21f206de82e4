#include "weylhull/cones.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "weylhull/arrangement.hpp"
#include "weylhull/combinatorics.hpp"
#include "weylhull/linear_program.hpp"
#include "weylhull/special_functions.hpp"

namespace weylhull {

WeylChamber::WeylChamber(ReflectionType t, long rank) : type(t), n(rank) { check_reflection_rank(t, rank); }

std::vector<IntegerVector> WeylChamber::inequality_normals() const {
  const auto un = static_cast<std::size_t>(n);
  std::vector<IntegerVector> rows;
  auto row = [un](std::size_t plus, std::optional<std::size_t> minus, int minus_sign = -1) {
    IntegerVector r(un, BigInt(0));
    r[plus] = 1;
    if (minus) r[*minus] = minus_sign;
    return r;
  };
  switch (type) {
    case ReflectionType::A:
      break;
    case ReflectionType::B:
      rows.push_back(row(0, std::nullopt));
      break;
    case ReflectionType::D:
      rows.push_back(row(1, 0, -1));
      rows.push_back(row(1, 0, +1));
      break;
  }
  const std::size_t first = type == ReflectionType::D ? 1 : 0;
  for (std::size_t i = first; i + 1 < un; ++i) rows.push_back(row(i + 1, i));
  return rows;
}

Eigen::MatrixXd WeylChamber::inequalities() const {
  const auto rows = inequality_normals();
  Eigen::MatrixXd g(static_cast<Eigen::Index>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (long j = 0; j < n; ++j) g(static_cast<Eigen::Index>(i), j) = rows[i][static_cast<std::size_t>(j)].get_d();
  }
  return g;
}

bool WeylChamber::contains(const Eigen::VectorXd& x, double tol) const {
  return ((inequalities() * x).array() >= -tol).all();
}

std::vector<SignedPermutation> group_elements(ReflectionType type, long n) {
  check_reflection_rank(type, n);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<SignedPermutation> out;
  do {
    if (type == ReflectionType::A) {
      out.push_back({perm, std::vector<int>(perm.size(), 1)});
      continue;
    }
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
      if (type == ReflectionType::D && __builtin_popcountl(mask) % 2 != 0) continue;
      std::vector<int> sign(perm.size());
      for (std::size_t i = 0; i < sign.size(); ++i) sign[i] = (mask >> i) & 1 ? -1 : 1;
      out.push_back({perm, std::move(sign)});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<std::vector<IntegerVector>> chamber_orbit(const WeylChamber& chamber) {
  const auto base = chamber.inequality_normals();
  const auto elements = group_elements(chamber.type, chamber.n);
  std::vector<std::vector<IntegerVector>> orbit;
  orbit.reserve(elements.size());
  for (const auto& g : elements) {
    // x in gC iff g^{-1} x in C; as g ranges over the group so does g^{-1}.
    std::vector<IntegerVector> rows;
    rows.reserve(base.size());
    for (const auto& r : base) {
      IntegerVector t(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) t[i] = g.sign[i] * r[static_cast<std::size_t>(g.perm[i])];
      rows.push_back(std::move(t));
    }
    orbit.push_back(std::move(rows));
  }
  return orbit;
}

// ---------------------------------------------------------------------------
// Intrinsic volumes

IntrinsicVolumeVector IntrinsicVolumeVector::from_exact(std::vector<Rational> values) {
  if (values.empty()) throw std::invalid_argument("IntrinsicVolumeVector: empty");
  IntrinsicVolumeVector out;
  out.n = values.size() - 1;
  out.v.reserve(values.size());
  for (const auto& q : values) out.v.push_back(to_double(q));
  out.exact = std::move(values);
  return out;
}

IntrinsicVolumeVector IntrinsicVolumeVector::from_estimate(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("IntrinsicVolumeVector: empty");
  IntrinsicVolumeVector out;
  out.n = values.size() - 1;
  out.v = std::move(values);
  return out;
}

std::vector<std::string> IntrinsicVolumeVector::invariant_violations(bool cone_is_subspace, double tol) const {
  std::vector<std::string> out;
  if (is_exact()) {
    Rational total = 0, even = 0;
    for (std::size_t k = 0; k < exact.size(); ++k) {
      if (sgn(exact[k]) < 0) out.push_back("v_" + std::to_string(k) + " is negative");
      total += exact[k];
      if (k % 2 == 0) even += exact[k];
    }
    if (total != 1) out.push_back("sum of volumes is " + total.get_str() + ", not 1");
    if (!cone_is_subspace && even != Rational(1, 2)) out.push_back("even half-tail is " + even.get_str() + ", not 1/2");
    return out;
  }
  double total = 0, even = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] < -tol) out.push_back("v_" + std::to_string(k) + " is negative");
    total += v[k];
    if (k % 2 == 0) even += v[k];
  }
  if (std::abs(total - 1.0) > tol) out.push_back("sum of volumes is " + format_double(total) + ", not 1");
  if (!cone_is_subspace && std::abs(even - 0.5) > tol) {
    out.push_back("even half-tail is " + format_double(even) + ", not 1/2");
  }
  return out;
}

IntrinsicVolumeVector weyl_intrinsic_volumes(ReflectionType type, long n) {
  check_reflection_rank(type, n);
  const RowFamily family = type == ReflectionType::A   ? RowFamily::stirling
                           : type == ReflectionType::B ? RowFamily::b_analog
                                                       : RowFamily::d_analog;
  const auto row = coefficient_row(family, n);
  const BigInt order = group_order(type, n);
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) v.push_back(make_rational((*row)[k], order));
  return IntrinsicVolumeVector::from_exact(std::move(v));
}

HalfTailValue half_tail(const IntrinsicVolumeVector& v, long k) {
  const long n = static_cast<long>(v.n);
  if (k < 0 || k > n) {
    throw std::out_of_range("half_tail: k = " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
  }
  HalfTailValue h;
  h.k = k;
  if (v.is_exact()) {
    Rational s = 0;
    for (long j = k; j <= n; j += 2) s += v.exact[static_cast<std::size_t>(j)];
    h.value = to_double(s);
    h.exact = s;
  } else {
    for (long j = k; j <= n; j += 2) h.value += v.v[static_cast<std::size_t>(j)];
  }
  return h;
}

namespace {

void check_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::out_of_range("steiner_tail_cdf: lambda outside [0, 1]");
}

double steiner_mixture(const IntrinsicVolumeVector& v, double lambda, bool left) {
  check_lambda(lambda);
  const long n = static_cast<long>(v.n);
  double f = 0.0;
  for (long k = 0; k <= n; ++k) {
    const double w = v.v[static_cast<std::size_t>(k)];
    if (w == 0.0) continue;
    double beta;
    if (k == n) beta = left ? (lambda > 0.0 ? 1.0 : 0.0) : 1.0;
    else if (k == 0) beta = left ? 0.0 : (lambda >= 1.0 ? 1.0 : 0.0);
    else beta = incomplete_beta(0.5 * static_cast<double>(n - k), 0.5 * static_cast<double>(k), lambda);
    f += w * beta;
  }
  return std::min(1.0, f);
}

}  // namespace

double steiner_tail_cdf(const IntrinsicVolumeVector& v, double lambda) { return steiner_mixture(v, lambda, false); }

double steiner_tail_cdf_left(const IntrinsicVolumeVector& v, double lambda) {
  return steiner_mixture(v, lambda, true);
}

// ---------------------------------------------------------------------------
// Projections

Eigen::VectorXd isotonic_regression(const Eigen::VectorXd& x) {
  const Eigen::Index n = x.size();
  std::vector<double> mean;
  std::vector<Eigen::Index> weight;
  mean.reserve(static_cast<std::size_t>(n));
  weight.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    mean.push_back(x(i));
    weight.push_back(1);
    while (mean.size() > 1 && mean[mean.size() - 2] > mean.back()) {
      const double m1 = mean.back();
      const Eigen::Index w1 = weight.back();
      mean.pop_back();
      weight.pop_back();
      const auto w0 = weight.back();
      mean.back() = (mean.back() * static_cast<double>(w0) + m1 * static_cast<double>(w1)) /
                    static_cast<double>(w0 + w1);
      weight.back() = w0 + w1;
    }
  }
  Eigen::VectorXd out(n);
  Eigen::Index pos = 0;
  for (std::size_t b = 0; b < mean.size(); ++b) {
    for (Eigen::Index j = 0; j < weight[b]; ++j) out(pos++) = mean[b];
  }
  return out;
}

Eigen::VectorXd dykstra_project(const Eigen::MatrixXd& rows, const Eigen::VectorXd& x, double tol, int max_sweeps) {
  const Eigen::Index m = rows.rows();
  Eigen::VectorXd y = x;
  Eigen::MatrixXd increments = Eigen::MatrixXd::Zero(x.size(), m);
  const Eigen::VectorXd norms_sq = rows.rowwise().squaredNorm();
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double moved = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
      const Eigen::VectorXd z = y + increments.col(i);
      const double s = rows.row(i).dot(z);
      Eigen::VectorXd p = z;
      if (s < 0.0) p -= (s / norms_sq(i)) * rows.row(i).transpose();
      increments.col(i) = z - p;
      moved = std::max(moved, (p - y).cwiseAbs().maxCoeff());
      y = p;
    }
    if (moved <= tol && ((rows * y).array() >= -tol).all()) return y;
  }
  throw std::runtime_error("dykstra_project: no convergence within the sweep cap");
}

Projection project_onto_weyl_chamber(const WeylChamber& chamber, const Eigen::VectorXd& x) {
  if (x.size() != chamber.n) throw std::invalid_argument("project_onto_weyl_chamber: dimension mismatch");
  if (!x.allFinite()) throw std::invalid_argument("project_onto_weyl_chamber: non-finite input");
  Projection out;
  switch (chamber.type) {
    case ReflectionType::A:
      out.point = isotonic_regression(x);
      break;
    case ReflectionType::B:
      out.point = isotonic_regression(x).cwiseMax(0.0);
      break;
    case ReflectionType::D:
      out.point = dykstra_project(chamber.inequalities(), x);
      break;
  }
  out.dist_sq = (x - out.point).squaredNorm();
  return out;
}

// ---------------------------------------------------------------------------
// Cone versus subspace

namespace {

// Positive optimum of  max sum_i (M y)_i  s.t.  M y >= 0, y in [-1, 1]^k.
template <class Scalar>
bool positive_slack(const std::vector<std::vector<Scalar>>& m, std::size_t k, const Scalar& threshold) {
  LinearProgram<Scalar> lp(k);
  for (std::size_t j = 0; j < k; ++j) lp.set_bounds(j, Scalar(-1), Scalar(1));
  for (const auto& row : m) {
    for (std::size_t j = 0; j < k; ++j) lp.objective[j] += row[j];
    lp.add_row(row, Relation::greater_equal, Scalar(0));
  }
  const auto res = solve(lp);
  return res.status == LpStatus::optimal && res.value > threshold;
}

}  // namespace

bool cone_meets_subspace(const Eigen::MatrixXd& rows, const Eigen::MatrixXd& basis, double margin) {
  if (rows.cols() != basis.rows()) throw std::invalid_argument("cone_meets_subspace: dimension mismatch");
  const Eigen::Index k = basis.cols();
  if (k == 0) return false;
  if (rows.rows() == 0) return true;
  const Eigen::MatrixXd m = rows * basis;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  const double scale = std::max(sv.size() ? sv(0) : 0.0, rows.norm() * basis.norm());
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > 1e-10 * scale) ++rank;
  }
  // A direction of W on which every row vanishes lies in the cone's lineality space.
  if (rank < k) return true;
  std::vector<std::vector<double>> mm(static_cast<std::size_t>(m.rows()), std::vector<double>(static_cast<std::size_t>(k)));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < k; ++j) mm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  }
  return positive_slack<double>(mm, static_cast<std::size_t>(k), margin);
}

bool cone_meets_subspace(const RationalRows& rows, const RationalRows& basis) {
  const std::size_t k = basis.size();
  if (k == 0) return false;
  if (rows.empty()) return true;
  RationalRows m(rows.size(), RationalVector(k));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = dot(rows[i], basis[j]);
  }
  if (rank(m) < static_cast<long>(k)) return true;
  return positive_slack<Rational>(m, k, Rational(0));
}

// ---------------------------------------------------------------------------
// Sampling and Monte Carlo checks

Eigen::VectorXd random_sphere_point(long n, PhiloxStream& rng) {
  Eigen::VectorXd x(n);
  double norm = 0.0;
  do {
    for (long i = 0; i < n; ++i) x(i) = rng.normal();
    norm = x.norm();
  } while (norm == 0.0);
  return x / norm;
}

Eigen::MatrixXd random_grassmannian_basis(long n, long k, PhiloxStream& rng) {
  if (k < 0 || k > n) throw std::invalid_argument("random_grassmannian_basis: need 0 <= k <= n");
  Eigen::MatrixXd g(n, k);
  for (long j = 0; j < k; ++j) {
    for (long i = 0; i < n; ++i) g(i, j) = rng.normal();
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  return qr.householderQ() * Eigen::MatrixXd::Identity(n, k);
}

MCEstimate crofton_mc_estimate(const WeylChamber& chamber, long d, std::uint64_t samples, std::uint64_t seed,
                               unsigned threads) {
  if (d < 0 || d > chamber.n - 1) {
    throw std::out_of_range("crofton_mc_estimate: d = " + std::to_string(d) + " outside [0, n-1]");
  }
  const Eigen::MatrixXd rows = chamber.inequalities();
  const long n = chamber.n;
  const auto hits = run_streams<std::uint64_t>(samples, seed, threads, [&](PhiloxStream& rng, std::uint64_t count) {
    std::uint64_t h = 0;
    for (std::uint64_t s = 0; s < count; ++s) {
      const Eigen::MatrixXd basis = random_grassmannian_basis(n, n - d, rng);
      if (cone_meets_subspace(rows, basis)) ++h;
    }
    return h;
  });
  return MCEstimate::from_counts(hits, samples, seed, 0, 0.5);
}

double ks_distance(std::vector<double> xs, const std::function<double(double)>& cdf,
                   const std::function<double(double)>& cdf_left) {
  if (xs.empty()) throw std::invalid_argument("ks_distance: no samples");
  for (auto& x : xs) {
    if (std::abs(x) < 1e-12) x = 0.0;
    if (std::abs(x - 1.0) < 1e-12) x = 1.0;
  }
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double dmax = 0.0;
  std::size_t i = 0;
  while (i < xs.size()) {
    std::size_t j = i;
    while (j < xs.size() && xs[j] == xs[i]) ++j;
    const double below = static_cast<double>(i) / n;
    const double upto = static_cast<double>(j) / n;
    dmax = std::max({dmax, std::abs(cdf(xs[i]) - upto), std::abs(cdf_left(xs[i]) - below)});
    i = j;
  }
  return dmax;
}

namespace {

struct SampleList {
  std::vector<double> values;
  SampleList& operator+=(const SampleList& other) {
    values.insert(values.end(), other.values.begin(), other.values.end());
    return *this;
  }
};

}  // namespace

SteinerCheck steiner_ks_check(const WeylChamber& chamber, std::uint64_t samples, std::uint64_t seed,
                              unsigned threads) {
  const auto v = weyl_intrinsic_volumes(chamber.type, chamber.n);
  const auto all = run_streams<SampleList>(samples, seed, threads, [&](PhiloxStream& rng, std::uint64_t count) {
    SampleList list;
    list.values.reserve(count);
    for (std::uint64_t s = 0; s < count; ++s) {
      const Eigen::VectorXd theta = random_sphere_point(chamber.n, rng);
      list.values.push_back(std::clamp(project_onto_weyl_chamber(chamber, theta).dist_sq, 0.0, 1.0));
    }
    return list;
  });
  SteinerCheck out;
  out.samples = samples;
  out.seed = seed;
  out.ks = ks_distance(
      all.values, [&v](double x) { return steiner_tail_cdf(v, x); },
      [&v](double x) { return steiner_tail_cdf_left(v, x); });
  return out;
}

std::vector<Rational> schlafli_expected_volumes(long m, long n) {
  const BigInt total = schlafli_count(m, n);
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(n) + 1);
  v.push_back(make_rational(binomial(m - 1, n - 1), total));
  for (long k = 1; k <= n; ++k) v.push_back(make_rational(binomial(m, n - k), total));
  return v;
}

bool klivans_swartz_check(ReflectionType type, long n) {
  const auto v = weyl_intrinsic_volumes(type, n);
  const BigInt order = group_order(type, n);
  const auto arr = build_reflection_arrangement(type, n);
  const CharacteristicPolynomial chi = arr.size() <= kRegionCap ? whitney_characteristic_polynomial(arr)
                                                                : reflection_characteristic_polynomial(type, n);
  for (long k = 0; k <= n; ++k) {
    if (Rational(order) * v.exact[static_cast<std::size_t>(k)] != Rational(chi.coeff(k))) return false;
  }
  return true;
}

}  // namespace weylhull
