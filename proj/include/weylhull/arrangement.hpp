#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "weylhull/bigint.hpp"
#include "weylhull/exact_linalg.hpp"
#include "weylhull/reflection.hpp"

namespace weylhull {

/// Linear hyperplane {x : <normal, x> = 0}; the normal is kept primitive with a
/// positive leading entry so equal hyperplanes compare equal.
class Hyperplane {
 public:
  explicit Hyperplane(const IntegerVector& normal);
  const IntegerVector& normal() const { return normal_; }
  std::size_t dim() const { return normal_.size(); }
  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;

 private:
  IntegerVector normal_;
};

/// Finite set of distinct central hyperplanes in R^n.
class Arrangement {
 public:
  explicit Arrangement(std::size_t dim);

  /// Inserts unless an equal hyperplane is present; returns whether it was new.
  bool add(const Hyperplane& h);
  bool add(const IntegerVector& normal) { return add(Hyperplane(normal)); }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return planes_.size(); }
  const std::vector<Hyperplane>& hyperplanes() const { return planes_; }
  long rank() const;

 private:
  std::size_t dim_;
  std::vector<Hyperplane> planes_;
};

/// chi(t) = sum_k (-1)^{n-k} a_k t^k with unsigned a_k.
struct CharacteristicPolynomial {
  std::size_t dim = 0;
  std::vector<BigInt> a;  // a[0..dim]

  const BigInt& coeff(long k) const;
  /// Signed coefficient of t^k.
  BigInt signed_coeff(long k) const;
  BigInt evaluate(const BigInt& t) const;
  /// Violated invariants (leading 1, a_{n-1} = #hyperplanes when given,
  /// nonnegativity, unimodality, even sum == odd sum); empty when all hold.
  std::vector<std::string> invariant_violations(long num_hyperplanes = -1) const;

  friend bool operator==(const CharacteristicPolynomial&, const CharacteristicPolynomial&) = default;
};

/// Linear subspace of R^n spanned by linearly independent columns.
struct Subspace {
  std::size_t ambient = 0;
  RationalRows basis;  // basis vectors, each of length `ambient`

  std::size_t dim() const { return basis.size(); }
  std::size_t codim() const { return ambient - basis.size(); }
  /// Throws std::invalid_argument if the basis is rank-deficient or malformed.
  void validate() const;
  /// Builds from the columns of a double matrix, converted exactly.
  static Subspace from_columns(const Eigen::MatrixXd& columns);
};

Arrangement build_reflection_arrangement(ReflectionType type, long n);

/// Default cap on #A for the 2^m subset sum.
inline constexpr std::size_t kWhitneyCap = 20;
/// Default cap on #A for the sign-vector oracles.
inline constexpr std::size_t kRegionCap = 16;

/// Whitney's subset expansion with exact ranks.
CharacteristicPolynomial whitney_characteristic_polynomial(const Arrangement& arr,
                                                           std::size_t cap = kWhitneyCap);
/// Closed form from the factorization over linear factors.
CharacteristicPolynomial reflection_characteristic_polynomial(ReflectionType type, long n);

/// (-1)^n chi(-1).
BigInt zaslavsky_region_count(const CharacteristicPolynomial& chi);

/// Characteristic polynomial of the arrangement induced on a generic subspace of codimension d.
CharacteristicPolynomial restrict_characteristic_polynomial(const CharacteristicPolynomial& chi, long d);

/// Regions met by a generic subspace of codimension d: 2(a_{d+1} + a_{d+3} + ...).
BigInt intersected_region_count(const CharacteristicPolynomial& chi, long d);

/// C(m, n) = 2 sum_{k<n} binom(m-1, k): regions of m generic central hyperplanes in R^n.
BigInt schlafli_count(long m, long n);

/// Characteristic polynomial of m hyperplanes in general position in R^n.
CharacteristicPolynomial generic_characteristic_polynomial(long m, long n);

using SignVector = std::vector<std::int8_t>;

/// Every realizable sign vector, found by depth-first extension with exact LPs.
std::vector<SignVector> enumerate_regions(const Arrangement& arr, std::size_t cap = kRegionCap);

enum class IntersectionMode { open, closed };

struct SubspaceRegionCount {
  long count = 0;
  bool general_position = false;
};

/// Open mode counts regions R with R cap L nonempty; closed mode counts
/// regions whose closure meets L outside the origin.
SubspaceRegionCount count_regions_meeting_subspace(const Arrangement& arr, const Subspace& L,
                                                   IntersectionMode mode, std::size_t cap = kRegionCap);

/// Exact general-position test of L against the arrangement.
bool is_general_position(const Arrangement& arr, const Subspace& L);

/// Arrangement {H cap L} written in the coordinates of L's basis.
Arrangement induced_arrangement(const Arrangement& arr, const Subspace& L);

/// Text format: `dim n`, then one integer normal per line; `#` starts a comment.
Arrangement parse_arrangement(std::istream& in);
void write_arrangement(std::ostream& out, const Arrangement& arr);

}  // namespace weylhull
