#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "weylhull/bigint.hpp"

namespace weylhull {

using IntegerVector = std::vector<BigInt>;
using RationalVector = std::vector<Rational>;
/// Row-major list of rows; every row has the same length.
using RationalRows = std::vector<RationalVector>;

/// Rank by fraction-free (Bareiss) elimination over the integers.
long rank(std::vector<IntegerVector> rows);
long rank(const RationalRows& rows);

/// Basis (as rows) of { x : rows * x = 0 }, by exact reduced row echelon form.
RationalRows nullspace(const RationalRows& rows, std::size_t cols);

/// Scales a nonzero rational vector to the primitive integer vector with gcd 1
/// and positive first nonzero entry. Throws on the zero vector.
IntegerVector primitive_integer_vector(const RationalVector& v);
IntegerVector primitive_integer_vector(const IntegerVector& v);

RationalVector to_rational(const IntegerVector& v);

/// Exact conversion of a double matrix (every finite double is a dyadic rational).
RationalRows to_rational_rows(const Eigen::MatrixXd& m);
Eigen::MatrixXd to_double_matrix(const RationalRows& rows);

Rational dot(const RationalVector& a, const RationalVector& b);

/// Integer row-echelon basis grown one vector at a time; `try_add` reports
/// whether the vector increased the rank. `pop` undoes the last successful add.
class IncrementalEchelon {
 public:
  explicit IncrementalEchelon(std::size_t dim) : dim_(dim) {}
  bool try_add(const IntegerVector& v);
  void pop() {
    rows_.pop_back();
    pivots_.pop_back();
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<IntegerVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace weylhull
