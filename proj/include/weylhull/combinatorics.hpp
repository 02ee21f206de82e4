#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "weylhull/bigint.hpp"

namespace weylhull {

/// Dense ascending-power coefficients of a monic product of linear factors.
/// Lookups outside [0, degree] return zero.
class CoefficientVector {
 public:
  CoefficientVector() : coeffs_{BigInt(1)} {}
  explicit CoefficientVector(std::vector<BigInt> coeffs);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const BigInt& operator[](long k) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  /// Value at t = 1, i.e. the row sum.
  BigInt sum() const;
  /// Sum of coefficients with index k, k+2, k+4, ... (k may be negative).
  BigInt parity_tail(long k) const;
  /// Sum of coefficients with index k, k-2, k-4, ... down to 0.
  BigInt parity_head(long k) const;

  friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Coefficients of prod_i (t + roots[i]).
CoefficientVector expand_linear_factors(std::span<const long> roots);

enum class RowFamily { stirling, b_analog, d_analog };

/// Largest n accepted by the exact paths; beyond it callers must use float mode.
long exact_row_cap();
void set_exact_row_cap(long cap);

/// Full row for t(t+1)...(t+n-1), (t+1)(t+3)...(t+2n-1), or (t+1)...(t+2n-3)(t+n-1).
/// Rows are memoized in a bounded LRU cache shared by all threads.
std::shared_ptr<const CoefficientVector> coefficient_row(RowFamily family, long n);

BigInt stirling_unsigned(long n, long k);
BigInt b_coefficient(long n, long k);
BigInt d_coefficient(long n, long k);

/// Coefficients of prod_i (t+1)(t+3)...(t+2 n_i - 1).
CoefficientVector product_coefficients(std::span<const long> ns);

struct PoissonBinomialPMF {
  std::vector<double> probs;
  std::vector<double> pmf;
};

/// Distribution of a sum of independent Bernoulli(p_i), by the convolution DP.
PoissonBinomialPMF poisson_binomial_pmf(std::span<const double> probs);

/// Same DP restricted to k <= max_k; entries are exact (up to rounding) since
/// mass only flows upward.
std::vector<double> poisson_binomial_head(std::span<const double> probs, long max_k);

/// Success probabilities whose Poisson-binomial law is the normalized row.
std::vector<double> row_bernoulli_probs(RowFamily family, long n);

/// Number of cached rows; exposed for tests.
std::size_t row_cache_size();
void clear_row_cache();

}  // namespace weylhull
