#include "weylhull/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace weylhull {

long rank(std::vector<IntegerVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t m = rows.size();
  const std::size_t n = rows[0].size();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && rows[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        rows[i][j] = rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j];
        mpz_divexact(rows[i][j].get_mpz_t(), rows[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      rows[i][c] = 0;
    }
    prev = rows[r][c];
    ++r;
  }
  return static_cast<long>(r);
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RationalRows& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

long rank(const RationalRows& rows) {
  if (rows.empty()) return 0;
  RationalRows a = rows;
  return static_cast<long>(rref(a, a[0].size()).size());
}

RationalRows nullspace(const RationalRows& rows, std::size_t cols) {
  RationalRows a = rows;
  const auto pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  RationalRows basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

IntegerVector primitive_integer_vector(const RationalVector& v) {
  BigInt lcm_den = 1;
  for (const auto& q : v) lcm_den = lcm(lcm_den, BigInt(q.get_den()));
  IntegerVector out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(BigInt(q.get_num()) * (lcm_den / BigInt(q.get_den())));
  return primitive_integer_vector(out);
}

IntegerVector primitive_integer_vector(const IntegerVector& v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) throw std::invalid_argument("primitive_integer_vector: zero vector");
  IntegerVector out(v);
  for (auto& x : out) x /= g;
  for (const auto& x : out) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : out) y = -y;
    }
    break;
  }
  return out;
}

RationalVector to_rational(const IntegerVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

RationalRows to_rational_rows(const Eigen::MatrixXd& m) {
  RationalRows rows(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    rows[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(m.cols()));
    for (Eigen::Index j = 0; j < m.cols(); ++j) rows[static_cast<std::size_t>(i)].emplace_back(m(i, j));
  }
  return rows;
}

Eigen::MatrixXd to_double_matrix(const RationalRows& rows) {
  if (rows.empty()) return {};
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j].get_d();
    }
  }
  return m;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool IncrementalEchelon::try_add(const IntegerVector& v) {
  IntegerVector w = v;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (w[p] == 0) continue;
    const BigInt a = rows_[r][p];
    const BigInt b = w[p];
    for (std::size_t j = 0; j < dim_; ++j) w[j] = a * w[j] - b * rows_[r][j];
  }
  std::size_t p = 0;
  while (p < dim_ && w[p] == 0) ++p;
  if (p == dim_) return false;
  rows_.push_back(primitive_integer_vector(w));
  pivots_.push_back(p);
  return true;
}

}  // namespace weylhull
