#pragma once

#include <gmpxx.h>

#include <string>

namespace weylhull {

using BigInt = mpz_class;

/// Exact rational; gmp keeps it canonical (reduced, positive denominator, 0/1).
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

/// Renders a double with 17 significant digits (round-trip safe).
std::string format_double(double x);

/// Double within one ulp of an exact rational, also for huge numerators/denominators.
double to_double(const Rational& q);

BigInt factorial(unsigned long n);
BigInt binomial(long n, long k);
BigInt pow2(unsigned long e);

}  // namespace weylhull
