#pragma once

// Dense two-phase simplex with Bland's rule, templated on the scalar type.
// Instantiated for `double` (Monte Carlo paths) and `Rational` (exact oracles).

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "weylhull/bigint.hpp"

namespace weylhull {

template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr double eps = 1e-11;
  static bool is_zero(double x) { return std::abs(x) <= eps; }
  static bool is_positive(double x) { return x > eps; }
  static bool is_negative(double x) { return x < -eps; }
};

template <>
struct ScalarTraits<Rational> {
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static bool is_positive(const Rational& x) { return sgn(x) > 0; }
  static bool is_negative(const Rational& x) { return sgn(x) < 0; }
};

enum class Relation { less_equal, greater_equal, equal };
enum class LpStatus { optimal, infeasible, unbounded };

/// maximize c.x  subject to  rows (a.x REL b)  and  lower <= x <= upper.
/// Every variable needs a finite lower bound; an absent upper bound means +inf.
template <class Scalar>
struct LinearProgram {
  struct Row {
    std::vector<Scalar> coeffs;
    Relation rel = Relation::less_equal;
    Scalar rhs{};
  };

  explicit LinearProgram(std::size_t num_vars)
      : objective(num_vars, Scalar(0)), lower(num_vars, Scalar(0)), upper(num_vars) {}

  std::size_t num_vars() const { return objective.size(); }

  void add_row(std::vector<Scalar> coeffs, Relation rel, Scalar rhs) {
    if (coeffs.size() != num_vars()) throw std::invalid_argument("LinearProgram: row width mismatch");
    rows.push_back({std::move(coeffs), rel, std::move(rhs)});
  }

  void set_bounds(std::size_t j, Scalar lo, std::optional<Scalar> hi) {
    lower[j] = std::move(lo);
    upper[j] = std::move(hi);
  }

  std::vector<Scalar> objective;
  std::vector<Row> rows;
  std::vector<Scalar> lower;
  std::vector<std::optional<Scalar>> upper;
};

template <class Scalar>
struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Scalar value{};
  std::vector<Scalar> x;
};

namespace detail {

template <class Scalar>
class SimplexTableau {
  using T = ScalarTraits<Scalar>;

 public:
  SimplexTableau(std::size_t rows, std::size_t cols)
      : m_(rows), n_(cols), a_(rows * cols, Scalar(0)), b_(rows, Scalar(0)), basis_(rows, 0) {}

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  Scalar& rhs(std::size_t i) { return b_[i]; }
  std::size_t& basic(std::size_t i) { return basis_[i]; }
  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }

  void pivot(std::size_t r, std::size_t c) {
    const Scalar inv = Scalar(1) / at(r, c);
    for (std::size_t j = 0; j < n_; ++j) {
      if (!T::is_zero(at(r, j))) at(r, j) *= inv;
    }
    at(r, c) = Scalar(1);
    b_[r] *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      const Scalar f = at(i, c);
      if (T::is_zero(f)) {
        at(i, c) = Scalar(0);
        continue;
      }
      for (std::size_t j = 0; j < n_; ++j) {
        if (!T::is_zero(at(r, j))) at(i, j) -= f * at(r, j);
      }
      at(i, c) = Scalar(0);
      b_[i] -= f * b_[r];
    }
    basis_[r] = c;
  }

  /// Maximizes cost.x over the current basis; columns with allowed[j] == false never enter.
  LpStatus optimize(const std::vector<Scalar>& cost, const std::vector<bool>& allowed) {
    std::vector<Scalar> reduced(n_);
    for (;;) {
      // reduced_j = c_j - c_B . column_j
      for (std::size_t j = 0; j < n_; ++j) reduced[j] = cost[j];
      for (std::size_t i = 0; i < m_; ++i) {
        const Scalar& cb = cost[basis_[i]];
        if (T::is_zero(cb)) continue;
        for (std::size_t j = 0; j < n_; ++j) {
          if (!T::is_zero(at(i, j))) reduced[j] -= cb * at(i, j);
        }
      }
      std::size_t enter = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (allowed[j] && T::is_positive(reduced[j])) {
          enter = j;
          break;
        }
      }
      if (enter == n_) return LpStatus::optimal;

      std::size_t leave = m_;
      Scalar best{};
      for (std::size_t i = 0; i < m_; ++i) {
        if (!T::is_positive(at(i, enter))) continue;
        Scalar ratio = b_[i] / at(i, enter);
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return LpStatus::unbounded;
      pivot(leave, enter);
    }
  }

  Scalar objective_value(const std::vector<Scalar>& cost) const {
    Scalar v(0);
    for (std::size_t i = 0; i < m_; ++i) v += cost[basis_[i]] * b_[i];
    return v;
  }

 private:
  std::size_t m_, n_;
  std::vector<Scalar> a_;
  std::vector<Scalar> b_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

template <class Scalar>
LpResult<Scalar> solve(const LinearProgram<Scalar>& lp) {
  using T = ScalarTraits<Scalar>;
  const std::size_t nv = lp.num_vars();

  // Shift x = lower + x' and append x'_j <= upper_j - lower_j.
  struct StdRow {
    std::vector<Scalar> a;
    Relation rel;
    Scalar b;
  };
  std::vector<StdRow> rows;
  rows.reserve(lp.rows.size() + nv);
  for (const auto& r : lp.rows) {
    Scalar b = r.rhs;
    for (std::size_t j = 0; j < nv; ++j) {
      if (!T::is_zero(lp.lower[j])) b -= r.coeffs[j] * lp.lower[j];
    }
    rows.push_back({r.coeffs, r.rel, std::move(b)});
  }
  for (std::size_t j = 0; j < nv; ++j) {
    if (!lp.upper[j]) continue;
    std::vector<Scalar> a(nv, Scalar(0));
    a[j] = Scalar(1);
    rows.push_back({std::move(a), Relation::less_equal, *lp.upper[j] - lp.lower[j]});
  }
  for (auto& r : rows) {
    if (T::is_negative(r.b)) {
      for (auto& v : r.a) v = -v;
      r.b = -r.b;
      if (r.rel == Relation::less_equal) r.rel = Relation::greater_equal;
      else if (r.rel == Relation::greater_equal) r.rel = Relation::less_equal;
    }
  }

  std::size_t n_slack = 0, n_art = 0;
  for (const auto& r : rows) {
    if (r.rel != Relation::equal) ++n_slack;
    if (r.rel != Relation::less_equal) ++n_art;
  }
  const std::size_t m = rows.size();
  const std::size_t cols = nv + n_slack + n_art;
  const std::size_t art0 = nv + n_slack;
  detail::SimplexTableau<Scalar> tab(m, cols);
  std::size_t s = nv, a = art0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nv; ++j) tab.at(i, j) = rows[i].a[j];
    tab.rhs(i) = rows[i].b;
    switch (rows[i].rel) {
      case Relation::less_equal:
        tab.at(i, s) = Scalar(1);
        tab.basic(i) = s++;
        break;
      case Relation::greater_equal:
        tab.at(i, s++) = Scalar(-1);
        tab.at(i, a) = Scalar(1);
        tab.basic(i) = a++;
        break;
      case Relation::equal:
        tab.at(i, a) = Scalar(1);
        tab.basic(i) = a++;
        break;
    }
  }

  LpResult<Scalar> result;
  std::vector<bool> allowed(cols, true);
  if (n_art > 0) {
    std::vector<Scalar> phase1(cols, Scalar(0));
    for (std::size_t j = art0; j < cols; ++j) phase1[j] = Scalar(-1);
    tab.optimize(phase1, allowed);
    if (T::is_negative(tab.objective_value(phase1))) {
      result.status = LpStatus::infeasible;
      return result;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basic(i) < art0) continue;
      for (std::size_t j = 0; j < art0; ++j) {
        if (!T::is_zero(tab.at(i, j))) {
          tab.pivot(i, j);
          break;
        }
      }
    }
    for (std::size_t j = art0; j < cols; ++j) allowed[j] = false;
  }

  std::vector<Scalar> cost(cols, Scalar(0));
  for (std::size_t j = 0; j < nv; ++j) cost[j] = lp.objective[j];
  if (tab.optimize(cost, allowed) == LpStatus::unbounded) {
    result.status = LpStatus::unbounded;
    return result;
  }

  result.status = LpStatus::optimal;
  result.x.assign(lp.lower.begin(), lp.lower.end());
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basic(i) < nv) result.x[tab.basic(i)] += tab.rhs(i);
  }
  result.value = Scalar(0);
  for (std::size_t j = 0; j < nv; ++j) result.value += lp.objective[j] * result.x[j];
  return result;
}

}  // namespace weylhull
