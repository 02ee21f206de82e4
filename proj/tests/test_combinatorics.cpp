#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "weylhull/combinatorics.hpp"

using namespace weylhull;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("expand_linear_factors") {
  std::vector<long> r1{1, 3};
  CHECK(expand_linear_factors(r1).coeffs() == ints({3, 4, 1}));
  std::vector<long> empty;
  CHECK(expand_linear_factors(empty).coeffs() == ints({1}));
  std::vector<long> r2{1, 3, 5, 7};
  const auto c = expand_linear_factors(r2);
  CHECK(c.coeffs() == ints({105, 176, 86, 16, 1}));
  CHECK(c.degree() == 4);
  CHECK(c[-1] == 0);
  CHECK(c[5] == 0);
  CHECK(c.sum() == 384);
  CHECK(c.parity_tail(1) == 176 + 16);
  CHECK(c.parity_tail(-2) == 105 + 86 + 1);
  CHECK(c.parity_head(3) == 176 + 16);
}

TEST_CASE("stirling numbers of the first kind") {
  CHECK(stirling_unsigned(3, 2) == 3);
  CHECK(stirling_unsigned(4, 2) == 11);
  CHECK(stirling_unsigned(5, 0) == 0);
  CHECK(stirling_unsigned(5, 6) == 0);
  CHECK(stirling_unsigned(10, 1) == 362880);
  for (long n = 1; n <= 30; ++n) CHECK(coefficient_row(RowFamily::stirling, n)->sum() == factorial(n));
}

TEST_CASE("B row") {
  CHECK(b_coefficient(2, 1) == 4);
  CHECK(b_coefficient(3, 1) == 23);
  CHECK(b_coefficient(10, 0) == 654729075);
  CHECK(b_coefficient(3, 4) == 0);
  for (long n = 1; n <= 30; ++n) {
    CHECK(coefficient_row(RowFamily::b_analog, n)->sum() == pow2(n) * factorial(n));
    // B(n,0) = (2n-1)!!
    BigInt dbl = 1;
    for (long k = 1; k <= 2 * n - 1; k += 2) dbl *= k;
    CHECK(b_coefficient(n, 0) == dbl);
  }
  // B(n+1,k) = (2n+1) B(n,k) + B(n,k-1)
  for (long n = 1; n < 20; ++n) {
    for (long k = 0; k <= n + 1; ++k) {
      CHECK(b_coefficient(n + 1, k) == (2 * n + 1) * b_coefficient(n, k) + (k ? b_coefficient(n, k - 1) : BigInt(0)));
    }
  }
}

TEST_CASE("D row") {
  CHECK(d_coefficient(2, 1) == 2);
  CHECK(d_coefficient(3, 1) == 11);
  CHECK(d_coefficient(3, 4) == 0);
  CHECK(d_coefficient(3, 1) == 2 * b_coefficient(2, 1) + b_coefficient(2, 0));
  for (long n = 2; n <= 30; ++n) CHECK(coefficient_row(RowFamily::d_analog, n)->sum() == pow2(n - 1) * factorial(n));
  CHECK_THROWS_AS(coefficient_row(RowFamily::d_analog, 1), std::invalid_argument);
}

TEST_CASE("rows have equal even and odd sums") {
  for (long n = 2; n <= 40; ++n) {
    for (auto fam : {RowFamily::stirling, RowFamily::b_analog, RowFamily::d_analog}) {
      const auto row = coefficient_row(fam, n);
      CHECK(row->parity_tail(0) == row->parity_tail(1));
    }
  }
}

TEST_CASE("product rows") {
  std::vector<long> a{1, 1}, b{2}, c{2, 1};
  CHECK(product_coefficients(a).coeffs() == ints({1, 2, 1}));
  CHECK(product_coefficients(b).coeffs() == ints({3, 4, 1}));
  CHECK(product_coefficients(c).coeffs() == ints({3, 7, 5, 1}));
}

TEST_CASE("invalid row arguments") {
  CHECK_THROWS_AS(coefficient_row(RowFamily::stirling, 0), std::invalid_argument);
  CHECK_THROWS_AS(coefficient_row(RowFamily::b_analog, exact_row_cap() + 1), std::out_of_range);
}

TEST_CASE("row cache") {
  clear_row_cache();
  CHECK(row_cache_size() == 0);
  const auto r1 = coefficient_row(RowFamily::b_analog, 12);
  const auto r2 = coefficient_row(RowFamily::b_analog, 12);
  CHECK(r1.get() == r2.get());
  CHECK(row_cache_size() == 1);
}

TEST_CASE("Poisson-binomial") {
  std::vector<double> half{0.5};
  const auto p = poisson_binomial_pmf(half);
  REQUIRE(p.pmf.size() == 2);
  CHECK(p.pmf[0] == doctest::Approx(0.5));
  CHECK(p.pmf[1] == doctest::Approx(0.5));

  std::vector<double> two{0.5, 0.25};
  CHECK(poisson_binomial_pmf(two).pmf[1] == doctest::Approx(0.5));

  // Normalized rows agree with the DP.
  for (auto fam : {RowFamily::stirling, RowFamily::b_analog, RowFamily::d_analog}) {
    const long n = 12;
    const auto row = coefficient_row(fam, n);
    const auto pmf = poisson_binomial_pmf(row_bernoulli_probs(fam, n)).pmf;
    REQUIRE(static_cast<long>(pmf.size()) == n + 1);
    const double total = row->sum().get_d();
    for (long k = 0; k <= n; ++k) CHECK(pmf[k] == doctest::Approx((*row)[k].get_d() / total).epsilon(1e-12));
  }

  const auto probs = row_bernoulli_probs(RowFamily::b_analog, 1000);
  const auto head = poisson_binomial_head(probs, 5);
  const auto full = poisson_binomial_pmf(probs).pmf;
  REQUIRE(head.size() == 6);
  for (int k = 0; k <= 5; ++k) CHECK(head[k] == doctest::Approx(full[k]).epsilon(1e-12));
  CHECK(std::accumulate(full.begin(), full.end(), 0.0) == doctest::Approx(1.0));
}
