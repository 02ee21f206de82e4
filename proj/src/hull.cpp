#include "weylhull/hull.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/QR>

#include "weylhull/linear_program.hpp"

namespace weylhull {

namespace {

// argmin |P_S mu| subject to sum(mu) = 1, from the bordered normal equations.
Eigen::VectorXd affine_minimizer(const Eigen::MatrixXd& points, const std::vector<Eigen::Index>& support) {
  const auto k = static_cast<Eigen::Index>(support.size());
  Eigen::MatrixXd ps(points.rows(), k);
  for (Eigen::Index i = 0; i < k; ++i) ps.col(i) = points.col(support[static_cast<std::size_t>(i)]);
  Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(k + 1, k + 1);
  kkt.topLeftCorner(k, k) = ps.transpose() * ps;
  kkt.topRightCorner(k, 1).setOnes();
  kkt.bottomLeftCorner(1, k).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
  rhs(k) = 1.0;
  return kkt.completeOrthogonalDecomposition().solve(rhs).head(k);
}

Eigen::VectorXd combine(const Eigen::MatrixXd& points, const std::vector<Eigen::Index>& support,
                        const Eigen::VectorXd& weights) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(points.rows());
  for (std::size_t i = 0; i < support.size(); ++i) x += weights(static_cast<Eigen::Index>(i)) * points.col(support[i]);
  return x;
}

}  // namespace

HullMembership min_norm_membership(const Eigen::MatrixXd& points, double tol) {
  const Eigen::Index m = points.cols();
  if (m == 0) throw std::invalid_argument("origin_in_hull: no points");
  if (!(tol > 0.0)) throw std::invalid_argument("origin_in_hull: tolerance must be positive");
  if (!points.allFinite()) throw std::invalid_argument("origin_in_hull: non-finite coordinates");

  const Eigen::VectorXd norms_sq = points.colwise().squaredNorm().transpose();
  Eigen::Index first = 0;
  norms_sq.minCoeff(&first);
  const double scale = std::sqrt(norms_sq.maxCoeff());
  constexpr double weight_eps = 1e-14;

  std::vector<Eigen::Index> support{first};
  Eigen::VectorXd weights = Eigen::VectorXd::Ones(1);
  Eigen::VectorXd x = points.col(first);

  const int max_major = 100 + 20 * static_cast<int>(m);
  for (int major = 0; major < max_major; ++major) {
    const double xnorm = x.norm();
    if (xnorm <= tol) break;
    const Eigen::VectorXd dots = points.transpose() * x;
    Eigen::Index j = 0;
    const double best = dots.minCoeff(&j);
    // min_i <x/|x|, p_i> >= |x| - 1e-12 scale pins the distance to within 1e-12 scale.
    if (xnorm * xnorm - best <= 1e-12 * scale * xnorm) break;
    if (std::find(support.begin(), support.end(), j) != support.end()) break;
    support.push_back(j);
    weights.conservativeResize(weights.size() + 1);
    weights(weights.size() - 1) = 0.0;

    for (int minor = 0; minor < 10 * static_cast<int>(m) + 10; ++minor) {
      const Eigen::VectorXd mu = affine_minimizer(points, support);
      if ((mu.array() > weight_eps).all()) {
        weights = mu;
        break;
      }
      double theta = 1.0;
      for (Eigen::Index i = 0; i < mu.size(); ++i) {
        if (mu(i) <= weight_eps) theta = std::min(theta, weights(i) / (weights(i) - mu(i)));
      }
      weights += theta * (mu - weights);
      Eigen::Index weakest = 0;
      weights.minCoeff(&weakest);
      std::vector<Eigen::Index> kept;
      std::vector<double> kept_w;
      for (Eigen::Index i = 0; i < weights.size(); ++i) {
        if (i == weakest || weights(i) <= weight_eps) continue;
        kept.push_back(support[static_cast<std::size_t>(i)]);
        kept_w.push_back(weights(i));
      }
      support = std::move(kept);
      weights = Eigen::Map<Eigen::VectorXd>(kept_w.data(), static_cast<Eigen::Index>(kept_w.size()));
    }
    weights /= weights.sum();
    x = combine(points, support, weights);
  }

  HullMembership out;
  out.distance = x.norm();
  if (out.distance <= tol) {
    out.inside = true;
    out.interior = true;
    out.lambda = Eigen::VectorXd::Zero(m);
    for (std::size_t i = 0; i < support.size(); ++i) out.lambda(support[i]) = weights(static_cast<Eigen::Index>(i));
    out.lambda /= out.lambda.sum();
  } else {
    out.separator = x / out.distance;
    out.boundary_ambiguous = out.distance <= 100.0 * tol;
  }
  return out;
}

bool is_integral(const Eigen::MatrixXd& points) {
  return (points.array() == points.array().round()).all() && (points.array().abs() < 0x1.0p52).all();
}

HullMembership exact_membership(const std::vector<IntegerVector>& points) {
  if (points.empty()) throw std::invalid_argument("origin_in_hull: no points");
  const std::size_t d = points[0].size();
  const std::size_t m = points.size();
  std::vector<RationalVector> p;
  p.reserve(m);
  for (const auto& v : points) {
    if (v.size() != d) throw std::invalid_argument("origin_in_hull: ragged point list");
    p.push_back(to_rational(v));
  }

  HullMembership out;
  out.exact = true;

  // Strict separation: max t  s.t.  <u, p_i> >= t,  u in [-1, 1]^d,  t in [0, 1].
  {
    LinearProgram<Rational> lp(d + 1);
    for (std::size_t j = 0; j < d; ++j) lp.set_bounds(j, Rational(-1), Rational(1));
    lp.set_bounds(d, Rational(0), Rational(1));
    lp.objective[d] = 1;
    for (const auto& pi : p) {
      RationalVector row(pi);
      row.push_back(Rational(-1));
      lp.add_row(std::move(row), Relation::greater_equal, Rational(0));
    }
    const auto res = solve(lp);
    if (res.status == LpStatus::optimal && sgn(res.value) > 0) {
      out.separator.resize(static_cast<Eigen::Index>(d));
      for (std::size_t j = 0; j < d; ++j) out.separator(static_cast<Eigen::Index>(j)) = to_double(res.x[j]);
      out.separator.normalize();
      Eigen::MatrixXd dp(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(m));
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < d; ++j) dp(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = p[i][j].get_d();
      }
      out.distance = min_norm_membership(dp).distance;
      return out;
    }
  }

  out.inside = true;
  // Convex weights: lambda >= 0, sum lambda = 1, sum lambda_i p_i = 0.
  {
    LinearProgram<Rational> lp(m);
    lp.add_row(RationalVector(m, Rational(1)), Relation::equal, Rational(1));
    for (std::size_t j = 0; j < d; ++j) {
      RationalVector row(m);
      for (std::size_t i = 0; i < m; ++i) row[i] = p[i][j];
      lp.add_row(std::move(row), Relation::equal, Rational(0));
    }
    const auto res = solve(lp);
    if (res.status != LpStatus::optimal) throw std::logic_error("exact_membership: weight LP infeasible");
    out.lambda.resize(static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < m; ++i) out.lambda(static_cast<Eigen::Index>(i)) = to_double(res.x[i]);
  }

  // Interior iff the points span R^d and no nonzero u is weakly positive on all of them.
  if (rank(RationalRows(p)) == static_cast<long>(d)) {
    LinearProgram<Rational> lp(d);
    for (std::size_t j = 0; j < d; ++j) lp.set_bounds(j, Rational(-1), Rational(1));
    for (const auto& pi : p) {
      for (std::size_t j = 0; j < d; ++j) lp.objective[j] += pi[j];
      lp.add_row(pi, Relation::greater_equal, Rational(0));
    }
    const auto res = solve(lp);
    out.interior = res.status == LpStatus::optimal && sgn(res.value) == 0;
  }
  return out;
}

HullMembership origin_in_hull(const Eigen::MatrixXd& points, double tol) {
  if (points.cols() == 0) throw std::invalid_argument("origin_in_hull: no points");
  if (!is_integral(points)) return min_norm_membership(points, tol);

  std::vector<IntegerVector> ip(static_cast<std::size_t>(points.cols()));
  for (Eigen::Index i = 0; i < points.cols(); ++i) {
    for (Eigen::Index j = 0; j < points.rows(); ++j) ip[static_cast<std::size_t>(i)].emplace_back(points(j, i));
  }
  // A float separator that checks out in exact arithmetic settles the outside case cheaply.
  HullMembership quick = min_norm_membership(points, tol);
  if (!quick.inside) {
    RationalVector u;
    for (Eigen::Index j = 0; j < quick.separator.size(); ++j) u.emplace_back(quick.separator(j));
    const bool certified = std::all_of(ip.begin(), ip.end(),
                                       [&u](const IntegerVector& v) { return sgn(dot(u, to_rational(v))) > 0; });
    if (certified) {
      quick.exact = true;
      quick.boundary_ambiguous = false;
      return quick;
    }
  }
  return exact_membership(ip);
}

}  // namespace weylhull
