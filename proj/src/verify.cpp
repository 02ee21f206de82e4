#include "weylhull/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "weylhull/absorption.hpp"
#include "weylhull/arrangement.hpp"
#include "weylhull/asymptotics.hpp"
#include "weylhull/combinatorics.hpp"
#include "weylhull/cones.hpp"
#include "weylhull/hull.hpp"
#include "weylhull/simulator.hpp"
#include "weylhull/special_functions.hpp"

namespace weylhull {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double x, int precision = 6) {
  std::ostringstream os;
  os.precision(precision);
  os << x;
  return os.str();
}

std::string q_str(const Rational& q) { return q.get_str(); }

CheckResult result(std::string name, std::string reference, std::string expected, std::string observed, bool passed) {
  return {std::move(name), std::move(reference), std::move(expected), std::move(observed), passed, 0.0};
}

/// Joins up to `limit` failure notes.
class Failures {
 public:
  void add(std::string note) {
    ++count_;
    if (notes_.size() < 3) notes_.push_back(std::move(note));
  }
  bool empty() const { return count_ == 0; }
  std::string summary(long total) const {
    std::ostringstream os;
    os << (total - count_) << "/" << total << " ok";
    for (const auto& n : notes_) os << "; " << n;
    return os.str();
  }

 private:
  long count_ = 0;
  std::vector<std::string> notes_;
};

std::vector<std::pair<ReflectionType, long>> reflection_grid(long max_n) {
  std::vector<std::pair<ReflectionType, long>> out;
  for (auto t : {ReflectionType::A, ReflectionType::B, ReflectionType::D}) {
    for (long n = (t == ReflectionType::B ? 1 : 2); n <= max_n; ++n) out.emplace_back(t, n);
  }
  return out;
}

std::string label(ReflectionType t, long n) { return std::string(to_string(t)) + std::to_string(n); }

unsigned threads_of(const VerifyOptions& o) { return resolve_threads(o.threads); }

// ---------------------------------------------------------------------------
// combinatorics and absorption

CheckResult row_sums(const VerifyOptions&) {
  Failures f;
  long total = 0;
  for (long n = 1; n <= 30; ++n) {
    const BigInt fact = factorial(static_cast<unsigned long>(n));
    const std::pair<RowFamily, BigInt> cases[] = {{RowFamily::stirling, fact},
                                                  {RowFamily::b_analog, pow2(n) * fact},
                                                  {RowFamily::d_analog, pow2(n - 1) * fact}};
    for (const auto& [fam, want] : cases) {
      if (fam == RowFamily::d_analog && n < 2) continue;
      ++total;
      if (coefficient_row(fam, n)->sum() != want) f.add("row sum n=" + std::to_string(n));
    }
  }
  return result("row sums", "t = 1 evaluation of the row polynomials", "n!, 2^n n!, 2^{n-1} n! for n <= 30",
                f.summary(total), f.empty());
}

CheckResult parity_identities(const VerifyOptions&) {
  Failures f;
  long total = 0;
  for (long n = 2; n <= 30; ++n) {
    const auto s = coefficient_row(RowFamily::stirling, n);
    const auto b = coefficient_row(RowFamily::b_analog, n);
    const BigInt half_fact = factorial(static_cast<unsigned long>(n)) / 2;
    const BigInt b_half = pow2(n - 1) * factorial(static_cast<unsigned long>(n));
    total += 2;
    if (s->parity_tail(0) != half_fact || s->parity_tail(1) != half_fact) f.add("stirling n=" + std::to_string(n));
    if (b->parity_tail(0) != b_half || b->parity_tail(1) != b_half) f.add("B n=" + std::to_string(n));
  }
  return result("parity identities", "t = -1 evaluation", "odd sum = even sum (n!/2, 2^{n-1} n!)", f.summary(total),
                f.empty());
}

CheckResult unimodality(const VerifyOptions&) {
  Failures f;
  long total = 0;
  for (auto fam : {RowFamily::stirling, RowFamily::b_analog, RowFamily::d_analog}) {
    for (long n = 2; n <= 30; ++n) {
      ++total;
      const auto& c = coefficient_row(fam, n)->coeffs();
      std::size_t k = 0;
      while (k + 1 < c.size() && c[k + 1] >= c[k]) ++k;
      while (k + 1 < c.size() && c[k + 1] <= c[k]) ++k;
      if (k + 1 != c.size()) f.add("family " + std::to_string(static_cast<int>(fam)) + " n=" + std::to_string(n));
    }
  }
  return result("unimodal rows", "log-concave coefficient rows", "every row rises then falls", f.summary(total),
                f.empty());
}

CheckResult recurrences(const VerifyOptions&) {
  Failures f;
  long total = 0;
  for (long n = 2; n <= 30; ++n) {
    for (long k = 0; k <= n; ++k) {
      total += 2;
      if (b_coefficient(n, k) != b_coefficient(n - 1, k - 1) + (2 * n - 1) * b_coefficient(n - 1, k)) {
        f.add("B(" + std::to_string(n) + "," + std::to_string(k) + ")");
      }
      if (d_coefficient(n, k) != b_coefficient(n - 1, k - 1) + (n - 1) * b_coefficient(n - 1, k)) {
        f.add("D(" + std::to_string(n) + "," + std::to_string(k) + ")");
      }
    }
  }
  return result("B recurrence and D from B", "row recurrences",
                "B(n,k) = B(n-1,k-1) + (2n-1)B(n-1,k); D(n,k) = B(n-1,k-1) + (n-1)B(n-1,k)", f.summary(total),
                f.empty());
}

CheckResult poisson_binomial_rows(const VerifyOptions&) {
  double worst = 0.0;
  for (auto fam : {RowFamily::stirling, RowFamily::b_analog, RowFamily::d_analog}) {
    for (long n = 2; n <= 25; ++n) {
      const auto row = coefficient_row(fam, n);
      const auto probs = row_bernoulli_probs(fam, n);
      const auto pmf = poisson_binomial_pmf(probs).pmf;
      const BigInt total = row->sum();
      for (long k = 0; k <= n; ++k) {
        const double exact = to_double(make_rational((*row)[k], total));
        const double got = k < static_cast<long>(pmf.size()) ? pmf[static_cast<std::size_t>(k)] : 0.0;
        if (exact > 0) worst = std::max(worst, std::abs(got - exact) / exact);
        else if (got != 0.0) worst = std::max(worst, 1.0);
      }
    }
  }
  return result("Poisson-binomial DP", "rows as Bernoulli sums", "relative error <= 1e-12 for n <= 25",
                "max relative error " + fmt(worst), worst <= 1e-12);
}

CheckResult complement_consistency(const VerifyOptions&) {
  Failures f;
  long total = 0;
  for (long n = 1; n <= 25; ++n) {
    for (long d = 1; d <= n; ++d) {
      std::vector<WalkFamily> fams{WalkFamily::walk_b(n, d)};
      if (n >= 2) {
        fams.push_back(WalkFamily::bridge_a(n, d));
        fams.push_back(WalkFamily::walk_d(n, d));
        fams.push_back(WalkFamily::joint_b({n / 2 + 1, n - n / 2}, d));
      }
      for (const auto& fam : fams) {
        ++total;
        try {
          const auto r = absorption_probability(fam);
          if (r.absorb + r.non_absorb != 1 || non_absorption_probability(fam) != r.non_absorb) {
            f.add(std::string(to_string(fam.kind)) + " n=" + std::to_string(n) + " d=" + std::to_string(d));
          }
        } catch (const std::exception& e) {
          f.add(e.what());
        }
      }
    }
  }
  return result("complement consistency", "odd tail + even tail", "absorb + non_absorb = 1 exactly, n <= 25",
                f.summary(total), f.empty());
}

CheckResult monotonicity(const VerifyOptions&) {
  Failures f;
  long total = 0;
  for (auto make : {WalkFamily::bridge_a, WalkFamily::walk_b, WalkFamily::walk_d}) {
    for (long d = 1; d <= 6; ++d) {
      for (long n = 2; n < 25; ++n) {
        total += 2;
        const auto here = absorption_probability(make(n, d));
        if (absorption_probability(make(n + 1, d)).absorb < here.absorb) {
          f.add(std::string(to_string(here.family.kind)) + " n=" + std::to_string(n) + " d=" + std::to_string(d));
        }
        if (absorption_probability(make(n, d + 2)).non_absorb < here.non_absorb) {
          f.add(std::string(to_string(here.family.kind)) + " d+2 at n=" + std::to_string(n));
        }
      }
    }
  }
  return result("monotonicity", "absorb grows with n; non-absorb grows with d in steps of 2",
                "no decreases for n <= 25, d <= 6", f.summary(total), f.empty());
}

CheckResult criterion_sparre_andersen(const VerifyOptions&) {
  Failures f;
  long total = 0;
  for (long n = 1; n <= 25; ++n) {
    ++total;
    const Rational want = make_rational(2 * binomial(2 * n, n), pow2(static_cast<unsigned long>(2 * n)));
    if (absorption_probability(WalkFamily::walk_b(n, 1)).non_absorb != want) f.add("walk-B n=" + std::to_string(n));
    if (n >= 2) {
      ++total;
      if (absorption_probability(WalkFamily::bridge_a(n, 1)).non_absorb != make_rational(2, n)) {
        f.add("bridge-A n=" + std::to_string(n));
      }
    }
  }
  return result("Sparre Andersen identities", "one-dimensional persistence",
                "walk-B non-absorb = 2 C(2n,n)/4^n (n = 1..25); bridge-A = 2/n (n = 2..25)", f.summary(total),
                f.empty());
}

CheckResult criterion_wendel(const VerifyOptions&) {
  Failures f;
  long total = 0;
  for (long r = 1; r <= 12; ++r) {
    for (long d = 1; d <= r; ++d) {
      ++total;
      const auto got = absorption_probability(WalkFamily::joint_b(std::vector<long>(static_cast<std::size_t>(r), 1), d));
      if (got.non_absorb != wendel_probability(r, d)) {
        f.add("r=" + std::to_string(r) + " d=" + std::to_string(d) + ": " + q_str(got.non_absorb));
      }
    }
  }
  return result("Wendel equivalence", "joint walks with one step each",
                "joint-B non-absorb = 2^{1-r} sum_{k<d} C(r-1,k) for r <= 12, d <= r", f.summary(total), f.empty());
}

// ---------------------------------------------------------------------------
// arrangements

Arrangement random_integer_arrangement(PhiloxStream& rng, long m, long n) {
  Arrangement arr(static_cast<std::size_t>(n));
  while (static_cast<long>(arr.size()) < m) {
    IntegerVector v(static_cast<std::size_t>(n));
    bool zero = true;
    for (auto& x : v) {
      x = static_cast<long>(rng.below(7)) - 3;
      if (x != 0) zero = false;
    }
    if (!zero) arr.add(v);
  }
  return arr;
}

CheckResult criterion_region_oracle(const VerifyOptions& o) {
  Failures f;
  long total = 0;
  for (const auto& [t, n] : reflection_grid(4)) {
    ++total;
    const auto arr = build_reflection_arrangement(t, n);
    const BigInt z = zaslavsky_region_count(whitney_characteristic_polynomial(arr));
    const auto regions = enumerate_regions(arr).size();
    if (z != static_cast<unsigned long>(regions)) f.add(label(t, n) + ": " + to_decimal(z) + " vs " + std::to_string(regions));
  }
  PhiloxStream rng(o.seed, 3);
  for (int i = 0; i < 20; ++i) {
    ++total;
    const long n = 1 + static_cast<long>(rng.below(4));
    const long m = 1 + static_cast<long>(rng.below(n == 1 ? 1 : 8));
    const auto arr = random_integer_arrangement(rng, m, n);
    const BigInt z = zaslavsky_region_count(whitney_characteristic_polynomial(arr));
    const auto regions = enumerate_regions(arr).size();
    if (z != static_cast<unsigned long>(regions)) {
      f.add("random m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " + to_decimal(z) + " vs " +
            std::to_string(regions));
    }
  }
  return result("region-count oracle", "Zaslavsky's count vs sign-vector enumeration",
                "equal for A/B/D (n <= 4) and 20 random integer arrangements", f.summary(total), f.empty());
}

CheckResult subspace_counts(const VerifyOptions& o, IntersectionMode mode, std::string name) {
  Failures f;
  long total = 0;
  PhiloxStream rng(o.seed, mode == IntersectionMode::open ? 4 : 5);
  for (const auto& [t, n] : reflection_grid(4)) {
    const auto arr = build_reflection_arrangement(t, n);
    const auto chi = reflection_characteristic_polynomial(t, n);
    for (long d = 0; d <= n - 1; ++d) {
      const BigInt want = intersected_region_count(chi, d);
      for (int draw = 0; draw < 10; ++draw) {
        ++total;
        const auto L = Subspace::from_columns(random_grassmannian_basis(n, n - d, rng));
        const auto got = count_regions_meeting_subspace(arr, L, mode);
        if (want != got.count || !got.general_position) {
          f.add(label(t, n) + " d=" + std::to_string(d) + ": " + std::to_string(got.count) + " vs " + to_decimal(want));
        }
      }
    }
  }
  return result(std::move(name), "intersected-region count of a generic subspace",
                "2(a_{d+1} + a_{d+3} + ...) on every Gaussian draw, d <= n-1", f.summary(total), f.empty());
}

CheckResult criterion_intersection_oracle(const VerifyOptions& o) {
  return subspace_counts(o, IntersectionMode::open, "intersected-region oracle");
}

CheckResult closed_mode_agreement(const VerifyOptions& o) {
  return subspace_counts(o, IntersectionMode::closed, "closed-mode count in general position");
}

RationalRows random_rational_basis(PhiloxStream& rng, long n, long k) {
  RationalRows rows(static_cast<std::size_t>(k), RationalVector(static_cast<std::size_t>(n)));
  for (auto& r : rows) {
    for (auto& x : r) x = Rational(static_cast<long>(rng.below(19)) - 9, 1 + static_cast<long>(rng.below(4)));
  }
  return rows;
}

CheckResult restriction_consistency(const VerifyOptions& o) {
  Failures f;
  long total = 0;
  PhiloxStream rng(o.seed, 6);
  for (const auto& [t, n] : reflection_grid(4)) {
    const auto arr = build_reflection_arrangement(t, n);
    const auto chi = whitney_characteristic_polynomial(arr);
    for (long d = 1; d <= n - 1; ++d) {
      Subspace L{static_cast<std::size_t>(n), {}};
      bool found = false;
      for (int attempt = 0; attempt < 100 && !found; ++attempt) {
        L.basis = random_rational_basis(rng, n, n - d);
        found = rank(L.basis) == n - d && is_general_position(arr, L);
      }
      ++total;
      if (!found) {
        f.add(label(t, n) + " d=" + std::to_string(d) + ": no generic rational subspace drawn");
        continue;
      }
      const auto induced = whitney_characteristic_polynomial(induced_arrangement(arr, L));
      if (!(induced == restrict_characteristic_polynomial(chi, d))) f.add(label(t, n) + " d=" + std::to_string(d));
    }
  }
  return result("restriction consistency", "characteristic polynomial of the arrangement induced on L",
                "Whitney polynomial of A|L equals the restricted polynomial", f.summary(total), f.empty());
}

CheckResult non_generic_bounds(const VerifyOptions&) {
  Failures f;
  long total = 0;
  auto unit = [](long n, std::vector<std::pair<long, long>> entries) {
    RationalVector v(static_cast<std::size_t>(n));
    for (auto [i, x] : entries) v[static_cast<std::size_t>(i)] = x;
    return v;
  };
  struct Case {
    ReflectionType type;
    long n;
    RationalRows basis;
  };
  std::vector<Case> cases{
      {ReflectionType::B, 3, {unit(3, {{0, 1}})}},
      {ReflectionType::B, 3, {unit(3, {{0, 1}}), unit(3, {{1, 1}})}},
      {ReflectionType::B, 4, {unit(4, {{0, 1}, {1, 1}}), unit(4, {{2, 1}})}},
      {ReflectionType::A, 3, {unit(3, {{0, 1}, {1, 1}, {2, 1}})}},
      {ReflectionType::A, 4, {unit(4, {{0, 1}, {1, -1}}), unit(4, {{2, 1}, {3, 2}})}},
      {ReflectionType::D, 3, {unit(3, {{0, 1}, {1, 1}})}},
      {ReflectionType::D, 4, {unit(4, {{3, 1}}), unit(4, {{0, 1}, {1, 2}})}},
  };
  std::ostringstream obs;
  for (const auto& c : cases) {
    ++total;
    const auto arr = build_reflection_arrangement(c.type, c.n);
    const Subspace L{static_cast<std::size_t>(c.n), c.basis};
    const long d = c.n - static_cast<long>(c.basis.size());
    const BigInt generic = intersected_region_count(reflection_characteristic_polynomial(c.type, c.n), d);
    const auto open = count_regions_meeting_subspace(arr, L, IntersectionMode::open);
    const auto closed = count_regions_meeting_subspace(arr, L, IntersectionMode::closed);
    obs << label(c.type, c.n) << " d=" << d << ": " << open.count << " <= " << generic << " <= " << closed.count
        << "; ";
    if (!(open.count <= generic && generic <= closed.count)) f.add(label(c.type, c.n));
  }
  return result("non-generic subspace bounds", "open count <= generic count <= closed count",
                "open <= generic <= closed", obs.str() + f.summary(total), f.empty());
}

CheckResult generic_arrangements(const VerifyOptions& o) {
  Failures f;
  long total = 0;
  PhiloxStream rng(o.seed, 7);
  while (total < 20) {
    const long n = 2 + static_cast<long>(rng.below(3));
    const long m = n + static_cast<long>(rng.below(static_cast<std::uint64_t>(9 - n)));
    Arrangement arr(static_cast<std::size_t>(n));
    while (static_cast<long>(arr.size()) < m) {
      IntegerVector v(static_cast<std::size_t>(n));
      for (auto& x : v) x = static_cast<long>(rng.below(41)) - 20;
      arr.add(v);
    }
    // keep only arrangements whose normals are in general position
    bool generic = true;
    const long k = n;
    std::vector<int> pick(static_cast<std::size_t>(m), 0);
    std::fill(pick.begin(), pick.begin() + k, 1);
    std::sort(pick.begin(), pick.end());
    do {
      std::vector<IntegerVector> rows;
      for (long i = 0; i < m; ++i) {
        if (pick[static_cast<std::size_t>(i)]) rows.push_back(arr.hyperplanes()[static_cast<std::size_t>(i)].normal());
      }
      if (rank(rows) != k) generic = false;
    } while (generic && std::next_permutation(pick.begin(), pick.end()));
    if (!generic) continue;
    ++total;
    const auto chi = whitney_characteristic_polynomial(arr);
    if (!(chi == generic_characteristic_polynomial(m, n)) || zaslavsky_region_count(chi) != schlafli_count(m, n)) {
      f.add("m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
  }
  return result("generic arrangements", "Schlafli count and binomial coefficients",
                "a_k = C(m, n-k) (k >= 1), a_0 = C(m-1, n-1), regions = C(m, n)", f.summary(total), f.empty());
}

CheckResult charpoly_invariants(const VerifyOptions& o) {
  Failures f;
  long total = 0;
  for (const auto& [t, n] : reflection_grid(6)) {
    ++total;
    const auto arr = build_reflection_arrangement(t, n);
    const auto v = reflection_characteristic_polynomial(t, n).invariant_violations(static_cast<long>(arr.size()));
    if (!v.empty()) f.add(label(t, n) + ": " + v.front());
  }
  PhiloxStream rng(o.seed, 8);
  for (int i = 0; i < 20; ++i) {
    ++total;
    const long n = 1 + static_cast<long>(rng.below(4));
    const long m = 1 + static_cast<long>(rng.below(n == 1 ? 1 : 8));
    const auto arr = random_integer_arrangement(rng, m, n);
    const auto chi = whitney_characteristic_polynomial(arr);
    // Leading coefficient 1 needs an essential arrangement; parity needs at least one plane.
    if (arr.rank() < n) continue;
    const auto v = chi.invariant_violations(static_cast<long>(arr.size()));
    if (!v.empty()) f.add("random m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " + v.front());
  }
  return result("characteristic polynomial invariants", "leading term, a_{n-1} = #planes, sign pattern, parity",
                "no violations", f.summary(total), f.empty());
}

// ---------------------------------------------------------------------------
// conic geometry

CheckResult criterion_klivans_swartz(const VerifyOptions&) {
  Failures f;
  long total = 0;
  for (const auto& [t, n] : reflection_grid(6)) {
    ++total;
    if (!klivans_swartz_check(t, n)) f.add(label(t, n));
  }
  return result("Klivans-Swartz", "#G v_k(chamber) = a_k", "exact equality for A/B/D, n <= 6", f.summary(total),
                f.empty());
}

CheckResult gauss_bonnet(const VerifyOptions&) {
  Failures f;
  long total = 0;
  for (const auto& [t, n] : reflection_grid(6)) {
    ++total;
    const auto v = weyl_intrinsic_volumes(t, n);
    const auto even = half_tail(v, 0);
    const auto odd = half_tail(v, 1);
    if (!even.exact || !odd.exact || *even.exact != Rational(1, 2) || *odd.exact != Rational(1, 2)) f.add(label(t, n));
  }
  return result("Gauss-Bonnet", "even and odd half-tails", "h_0 = h_1 = 1/2 exactly", f.summary(total), f.empty());
}

CheckResult volumes_from_half_tails(const VerifyOptions&) {
  Failures f;
  long total = 0;
  for (const auto& [t, n] : reflection_grid(6)) {
    const auto v = weyl_intrinsic_volumes(t, n);
    for (long k = 0; k <= n; ++k) {
      ++total;
      const Rational next = k + 2 <= n ? *half_tail(v, k + 2).exact : Rational(0);
      const Rational vk = *half_tail(v, k).exact - next;
      if (vk != v.exact[static_cast<std::size_t>(k)] || sgn(vk) < 0) f.add(label(t, n) + " k=" + std::to_string(k));
    }
  }
  return result("v_k = h_k - h_{k+2}", "half-tail differences", "equal and nonnegative", f.summary(total), f.empty());
}

CheckResult schlafli_volumes(const VerifyOptions&) {
  Failures f;
  long total = 0;
  for (long n = 1; n <= 6; ++n) {
    for (long m = n; m <= 10; ++m) {
      ++total;
      const auto ev = schlafli_expected_volumes(m, n);
      Rational sum = 0, even = 0;
      for (std::size_t k = 0; k < ev.size(); ++k) {
        sum += ev[k];
        if (k % 2 == 0) even += ev[k];
      }
      if (sum != 1 || even != Rational(1, 2)) f.add("m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
  }
  return result("random Schlafli cone volumes", "expected intrinsic volumes", "sum 1, even sum 1/2",
                f.summary(total), f.empty());
}

CheckResult projection_inequality(const VerifyOptions& o) {
  double worst = -HUGE_VAL;
  PhiloxStream rng(o.seed, 9);
  for (const auto& [t, n] : reflection_grid(5)) {
    const WeylChamber chamber(t, n);
    std::vector<Eigen::VectorXd> feasible;
    for (int i = 0; i < 100; ++i) {
      Eigen::VectorXd y(n);
      for (long j = 0; j < n; ++j) y(j) = 3.0 * rng.normal();
      feasible.push_back(project_onto_weyl_chamber(chamber, y).point);
    }
    for (int i = 0; i < 1000; ++i) {
      Eigen::VectorXd x(n);
      for (long j = 0; j < n; ++j) x(j) = 3.0 * rng.normal();
      const auto p = project_onto_weyl_chamber(chamber, x);
      for (const auto& q : feasible) worst = std::max(worst, (x - p.point).dot(q - p.point));
    }
  }
  return result("projection optimality", "variational inequality of the metric projection",
                "<x - p, q - p> <= 1e-8 (1000 points x 100 feasible q per chamber, n <= 5)",
                "max " + fmt(worst), worst <= 1e-8);
}

CheckResult crofton_grid(const VerifyOptions& o, const std::vector<std::pair<ReflectionType, long>>& grid,
                         long max_d, std::string name) {
  Failures f;
  long total = 0;
  std::ostringstream obs;
  for (const auto& [t, n] : grid) {
    const auto v = weyl_intrinsic_volumes(t, n);
    for (long d = 0; d <= std::min(max_d, n - 1); ++d) {
      if (max_d < n - 1 && d == 0) continue;
      ++total;
      const double exact = half_tail(v, d + 1).value;
      const auto e = crofton_mc_estimate(WeylChamber(t, n), d, o.samples, o.seed + static_cast<std::uint64_t>(total),
                                         threads_of(o));
      obs << label(t, n) << " d=" << d << ": " << fmt(e.p_hat, 5) << " vs " << fmt(exact, 5) << " (z "
          << fmt(e.z_score(exact), 3) << "); ";
      if (!(std::abs(e.p_hat - exact) <= 4.0 * e.stderr_)) f.add(label(t, n) + " d=" + std::to_string(d));
    }
  }
  return result(std::move(name), "conic Crofton formula, h_{d+1} = P[C meets W_{n-d}]/2",
                "|estimate - exact| <= 4 stderr", obs.str() + f.summary(total), f.empty());
}

CheckResult criterion_crofton(const VerifyOptions& o) {
  return crofton_grid(o, {{ReflectionType::B, 3}, {ReflectionType::B, 4}, {ReflectionType::A, 4}}, 2,
                      "Crofton Monte Carlo");
}

CheckResult crofton_all(const VerifyOptions& o) {
  return crofton_grid(o, reflection_grid(4), 100, "Crofton Monte Carlo, every chamber n <= 4");
}

CheckResult criterion_steiner(const VerifyOptions& o) {
  std::ostringstream obs;
  bool ok = true;
  for (const auto& [t, n] :
       std::vector<std::pair<ReflectionType, long>>{{ReflectionType::B, 2}, {ReflectionType::B, 3}, {ReflectionType::A, 3}}) {
    const auto s = steiner_ks_check(WeylChamber(t, n), o.samples, o.seed, threads_of(o));
    obs << label(t, n) << ": KS " << fmt(s.ks, 4) << "; ";
    ok = ok && s.ks < 0.01;
  }
  return result("Steiner Monte Carlo", "conic Steiner formula for dist^2(theta, C)", "KS distance < 0.01",
                obs.str(), ok);
}

// ---------------------------------------------------------------------------
// simulation

CheckResult criterion_kernel_chambers(const VerifyOptions& o) {
  struct Case {
    long n, d;
    ReflectionType g;
  };
  const Case cases[] = {{3, 1, ReflectionType::B}, {4, 1, ReflectionType::B}, {4, 2, ReflectionType::B},
                        {3, 1, ReflectionType::A}, {4, 2, ReflectionType::A}, {3, 1, ReflectionType::D}};
  PhiloxStream rng(o.seed, 10);
  Failures f;
  long total = 0;
  std::ostringstream obs;
  for (const auto& c : cases) {
    ++total;
    const long want = predicted_chamber_count(c.g, c.n, c.d);
    const auto model = IncrementModel::of(ModelKind::gaussian, c.d);
    std::vector<long> counts;
    for (int draw = 0; draw < 20; ++draw) {
      Eigen::MatrixXd xi = sample_increments(model, c.n, rng);
      if (c.g == ReflectionType::A) xi = make_bridge(xi);
      counts.push_back(chamber_intersection_count(xi, c.g));
    }
    const bool constant = std::all_of(counts.begin(), counts.end(), [&](long k) { return k == counts[0]; });
    obs << "(" << c.n << "," << c.d << "," << to_string(c.g) << ") " << counts[0] << (constant ? "" : "*") << "/"
        << want << "; ";
    if (!constant || counts[0] != want) f.add(label(c.g, c.n) + " d=" + std::to_string(c.d));
  }
  return result("kernel-chamber constancy", "chambers met by Ker A", "constant over 20 draws and equal to prediction",
                obs.str() + f.summary(total), f.empty());
}

struct ModelRun {
  ModelKind kind;
  long n, d;
  AbsorptionEstimate est;
  double exact;
};

std::vector<ModelRun> distribution_free_runs(const VerifyOptions& o, std::uint64_t seed_offset) {
  std::vector<ModelRun> runs;
  std::uint64_t i = 0;
  for (auto [n, d] : std::vector<std::pair<long, long>>{{6, 2}, {8, 3}, {10, 2}}) {
    const auto fam = WalkFamily::walk_b(n, d);
    const double exact = to_double(absorption_probability(fam).absorb);
    for (auto kind : {ModelKind::gaussian, ModelKind::uniform_sphere, ModelKind::heavy_tail}) {
      SimulationOptions so;
      so.threads = o.threads;
      runs.push_back({kind, n, d, estimate_absorption(IncrementModel::of(kind, d), fam, o.samples, o.seed + seed_offset + i++, so),
                      exact});
    }
  }
  return runs;
}

CheckResult criterion_distribution_free(const VerifyOptions& o) {
  Failures f;
  long total = 0;
  std::ostringstream obs;
  for (const auto& r : distribution_free_runs(o, 0)) {
    ++total;
    const auto& e = r.est.absorb;
    obs << to_string(r.kind) << "(" << r.n << "," << r.d << ") z " << fmt(e.z_score(r.exact), 3) << "; ";
    if (!(std::abs(e.p_hat - r.exact) <= 4.0 * e.stderr_ && e.stderr_ <= 0.005 && e.ambiguous_fraction < 1e-3)) {
      f.add(std::string(to_string(r.kind)) + " n=" + std::to_string(r.n) + " d=" + std::to_string(r.d) +
            " p=" + fmt(e.p_hat) + " se=" + fmt(e.stderr_) + " amb=" + fmt(e.ambiguous_fraction));
    }
  }
  return result("distribution-freeness", "absorption probability does not depend on the increment law",
                "|p - exact| <= 4 stderr, stderr <= 0.005, ambiguous < 1e-3", obs.str() + f.summary(total),
                f.empty());
}

CheckResult pairwise_distribution_free(const VerifyOptions& o) {
  const auto runs = distribution_free_runs(o, 1000);
  Failures f;
  long total = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    for (std::size_t j = i + 1; j < runs.size(); ++j) {
      if (runs[i].n != runs[j].n || runs[i].d != runs[j].d) continue;
      ++total;
      const auto& a = runs[i].est.absorb;
      const auto& b = runs[j].est.absorb;
      const double se = std::hypot(a.stderr_, b.stderr_);
      const double z = std::abs(a.p_hat - b.p_hat) / se;
      worst = std::max(worst, z);
      if (!(z <= 4.0)) f.add(std::string(to_string(runs[i].kind)) + " vs " + std::string(to_string(runs[j].kind)));
    }
  }
  return result("pairwise model agreement", "distribution-free absorption", "pairwise |diff| <= 4 combined stderr",
                "max z " + fmt(worst, 3) + "; " + f.summary(total), f.empty());
}

CheckResult criterion_lattice_bound(const VerifyOptions& o) {
  Failures f;
  long total = 0;
  std::ostringstream obs;
  for (auto [n, d] : std::vector<std::pair<long, long>>{{10, 2}, {12, 3}}) {
    ++total;
    const auto fam = WalkFamily::walk_b(n, d);
    const double exact = to_double(absorption_probability(fam).absorb);
    SimulationOptions so;
    so.threads = o.threads;
    const auto e = estimate_absorption(IncrementModel::of(ModelKind::lattice_simple, d), fam, o.samples, o.seed, so);
    obs << "(" << n << "," << d << ") closed " << fmt(e.absorb.p_hat, 5) << " interior " << fmt(e.interior.p_hat, 5)
        << " generic " << fmt(exact, 5) << "; ";
    if (!(e.absorb.p_hat >= exact - 4.0 * e.absorb.stderr_)) f.add("n=" + std::to_string(n));
  }
  return result("lattice one-sided bound", "absorption without general position is at least the generic value",
                "p(0 in H') >= exact - 4 stderr", obs.str() + f.summary(total), f.empty());
}

CheckResult lattice_interior_bound(const VerifyOptions& o) {
  Failures f;
  long total = 0;
  std::ostringstream obs;
  for (auto [n, d] : std::vector<std::pair<long, long>>{{10, 2}, {8, 3}}) {
    ++total;
    const auto fam = WalkFamily::walk_b(n, d);
    const double exact = to_double(absorption_probability(fam).absorb);
    SimulationOptions so;
    so.threads = o.threads;
    const auto e = estimate_absorption(IncrementModel::of(ModelKind::lattice_simple, d), fam, o.samples / 4,
                                       o.seed + 1, so);
    obs << "(" << n << "," << d << ") interior " << fmt(e.interior.p_hat, 5) << " generic " << fmt(exact, 5) << "; ";
    if (!(e.interior.p_hat <= exact + 4.0 * e.interior.stderr_)) f.add("n=" + std::to_string(n));
  }
  return result("lattice interior bound", "P[0 in Int H'] is at most the generic value",
                "p(0 in Int H') <= exact + 4 stderr", obs.str() + f.summary(total), f.empty());
}

CheckResult other_families(const VerifyOptions& o) {
  Failures f;
  long total = 0;
  std::ostringstream obs;
  const std::vector<WalkFamily> fams{WalkFamily::bridge_a(8, 2), WalkFamily::walk_d(8, 2), WalkFamily::walk_d(6, 3),
                                     WalkFamily::joint_b({3, 4}, 2)};
  std::uint64_t i = 0;
  for (const auto& fam : fams) {
    ++total;
    const double exact = to_double(absorption_probability(fam).absorb);
    SimulationOptions so;
    so.threads = o.threads;
    const auto e = estimate_absorption(IncrementModel::of(ModelKind::gaussian, fam.dim), fam, o.samples / 4,
                                       o.seed + 50 + i++, so);
    obs << to_string(fam.kind) << " z " << fmt(e.absorb.z_score(exact), 3) << "; ";
    if (!(std::abs(e.absorb.p_hat - exact) <= 4.0 * e.absorb.stderr_)) f.add(std::string(to_string(fam.kind)));
  }
  return result("bridge, D and joint families", "exact absorption for every family",
                "|p - exact| <= 4 stderr (Gaussian increments)", obs.str() + f.summary(total), f.empty());
}

CheckResult certificate_soundness(const VerifyOptions& o) {
  PhiloxStream rng(o.seed, 11);
  Failures f;
  long total = 0;
  for (auto kind : {ModelKind::gaussian, ModelKind::heavy_tail, ModelKind::lattice_simple}) {
    for (int i = 0; i < 1000; ++i) {
      ++total;
      const auto fam = WalkFamily::walk_b(6 + i % 5, 2 + i % 2);
      const auto pts = hull_points(fam, sample_family_increments(IncrementModel::of(kind, fam.dim), fam, rng));
      const auto h = origin_in_hull(pts);
      if (h.inside) {
        const double resid = (pts * h.lambda).norm();
        if (resid > 10.0 * kHullTolerance * std::max(1.0, pts.colwise().norm().maxCoeff()) ||
            std::abs(h.lambda.sum() - 1.0) > 1e-12 || (h.lambda.array() < -1e-15).any()) {
          f.add(std::string(to_string(kind)) + " inside residual " + fmt(resid));
        }
      } else if (!((h.separator.transpose() * pts).minCoeff() > 0.0)) {
        f.add(std::string(to_string(kind)) + " separator");
      }
    }
  }
  return result("certificate soundness", "hull membership certificates",
                "inside: |sum lambda_i S_i| <= 10 tol, sum lambda = 1; outside: min <u, S_i> > 0", f.summary(total),
                f.empty());
}

CheckResult seed_determinism(const VerifyOptions& o) {
  const auto fam = WalkFamily::walk_b(6, 2);
  const auto model = IncrementModel::of(ModelKind::gaussian, 2);
  SimulationOptions one, many;
  one.threads = 1;
  many.threads = 4;
  const auto a = estimate_absorption(model, fam, 20000, o.seed, one);
  const auto b = estimate_absorption(model, fam, 20000, o.seed, many);
  const bool same = a.absorb == b.absorb && a.interior == b.interior;
  return result("seed determinism", "fixed streams per seed", "bit-identical estimates for 1 and 4 threads",
                fmt(a.absorb.p_hat, 17) + " vs " + fmt(b.absorb.p_hat, 17), same);
}

CheckResult d_hull_identity(const VerifyOptions& o) {
  PhiloxStream rng(o.seed, 12);
  DHullCheck total;
  for (int i = 0; i < 200; ++i) {
    const long d = 2 + i % 2;
    const auto xi = sample_increments(IncrementModel::of(ModelKind::gaussian, d), 5 + i % 3, rng);
    const auto c = d_hull_identity_check(xi, 50, rng);
    total.checked += c.checked;
    total.mismatches += c.mismatches;
    total.ambiguous += c.ambiguous;
  }
  return result("D-hull identity", "Conv(S_1..S_n, S_n*) = Conv(S_1..S_n) u Conv(S_1..S_{n-1}, S_n*)",
                "no mismatches on sampled query points",
                std::to_string(total.mismatches) + " mismatches, " + std::to_string(total.ambiguous) + " ambiguous of " +
                    std::to_string(total.checked),
                total.mismatches == 0);
}

// ---------------------------------------------------------------------------
// asymptotics

std::string ratios(const std::vector<AsymptoticRow>& rows) {
  std::ostringstream os;
  for (const auto& r : rows) os << r.n << ":" << fmt(r.ratio, 4) << " ";
  return os.str();
}

CheckResult normal_cdf_checks(const VerifyOptions&) {
  double sym = 0.0;
  for (int i = -400; i <= 400; ++i) {
    const double a = i / 50.0;
    sym = std::max(sym, std::abs(normal_cdf(a) + normal_cdf(-a) - 1.0));
  }
  const std::pair<double, double> table[] = {{0.0, 0.5},
                                             {1.0, 0.8413447460685429},
                                             {-1.0, 0.15865525393145707},
                                             {2.0, 0.9772498680518208},
                                             {-3.0, 0.0013498980316300946},
                                             {0.5, 0.6914624612740131}};
  double worst = 0.0;
  for (auto [a, want] : table) worst = std::max(worst, std::abs(normal_cdf(a) - want));
  return result("normal CDF", "Phi(a) + Phi(-a) = 1 and reference values",
                "symmetry error <= 1e-14, table error <= 1e-12",
                "symmetry " + fmt(sym, 3) + ", table " + fmt(worst, 3), sym <= 1e-14 && worst <= 1e-12);
}

CheckResult mod_poisson_checks(const VerifyOptions&) {
  const double at0 = mod_poisson_limit(0.0);
  const double at_log2 = mod_poisson_limit(std::log(2.0));
  double complex_gap = 0.0;
  for (double z : {-2.0, -0.5, 0.0, 0.7, 1.5}) {
    complex_gap = std::max(complex_gap, std::abs(mod_poisson_limit(std::complex<double>(z, 0.0)) - mod_poisson_limit(z)) /
                                            mod_poisson_limit(z));
  }
  bool decreasing = true;
  std::ostringstream obs;
  for (double z : {-1.0, 1.0}) {
    double prev = HUGE_VAL;
    obs << "z=" << z << " gaps";
    for (long n : {1000L, 10000L, 100000L}) {
      const double gap = std::abs(mod_poisson_ratio(ReflectionType::B, n, z) - mod_poisson_limit(z));
      obs << " " << fmt(gap, 3);
      decreasing = decreasing && gap < prev;
      prev = gap;
    }
    obs << "; ";
  }
  const bool ok = std::abs(at0 - 1.0) <= 1e-12 && std::abs(at_log2 - 2.0 / std::sqrt(std::numbers::pi)) <= 1e-12 &&
                  complex_gap <= 1e-12 && decreasing;
  return result("mod-Poisson limit", "MGF ratio of the B-row count against Poisson(log n / 2)",
                "limit(0) = 1, limit(log 2) = 2/sqrt(pi), gaps decreasing over n = 1e3, 1e4, 1e5",
                "limit(0) " + fmt(at0, 15) + ", limit(log 2) " + fmt(at_log2, 15) + ", complex/real " +
                    fmt(complex_gap, 3) + "; " + obs.str(),
                ok);
}

CheckResult fixed_d_plugin(const VerifyOptions&) {
  const double b = fixed_dimension_asymptotic(ReflectionType::B, 100.0, 2);
  const double a = fixed_dimension_asymptotic(ReflectionType::A, std::exp(10.0), 2);
  const double want_b = std::log(100.0) / std::sqrt(100.0 * std::numbers::pi);
  const double want_a = 20.0 / std::exp(10.0);
  return result("fixed-d formula values", "plug-in values", "B(n=100,d=2) = log 100/sqrt(100 pi); A(e^10, 2) = 20/e^10",
                fmt(b, 10) + ", " + fmt(a, 10),
                std::abs(b - want_b) <= 1e-12 * want_b && std::abs(a - want_a) <= 1e-12 * want_a);
}

CheckResult fixed_d_trend_d(const VerifyOptions&) {
  std::ostringstream obs;
  bool ok = true;
  for (long d : {2L, 3L}) {
    const auto rows = asymptotic_table(Regime::fixed_dimension, ReflectionType::D, {1000, 10000, 100000, 1000000}, d);
    obs << "D d=" << d << ": " << ratios(rows) << "; ";
    ok = ok && ratio_error_decreasing(rows);
  }
  return result("fixed-d trend, type D", "fixed-dimension asymptotics", "|ratio - 1| strictly decreasing", obs.str(),
                ok);
}

CheckResult ld_half_example(const VerifyOptions&) {
  const auto rows =
      asymptotic_table(Regime::large_deviation, ReflectionType::B, {10000, 100000, 1000000}, 0.5);
  const double last = rows.back().ratio;
  const bool ok = last >= 0.6 && last <= 1.6 && ratio_error_decreasing(rows);
  return result("large deviations x = 1/2, B", "sharp large-deviation asymptotics",
                "ratio at 1e6 in [0.6, 1.6]; |ratio - 1| decreasing over 1e4, 1e5, 1e6 (d = round(log n / 4))",
                ratios(rows), ok);
}

CheckResult phase_boundary_check(const VerifyOptions&) {
  const double nstar = phase_boundary(ReflectionType::B, 4);
  const double above = regime_probabilities(ReflectionType::B, std::lround(4.0 * nstar), 4).absorb;
  const double below = regime_probabilities(ReflectionType::B, std::lround(nstar / 4.0), 4).absorb;
  return result("phase boundary", "absorption crosses 1/2 near n = e^{d/u}",
                "B, d=4: absorb(4 n*) > 0.5 > absorb(n*/4)",
                "n* " + fmt(nstar) + ", above " + fmt(above, 4) + ", below " + fmt(below, 4),
                above > 0.5 && below < 0.5);
}

CheckResult power_decay(const VerifyOptions&) {
  std::ostringstream obs;
  bool ok = true;
  for (auto t : {ReflectionType::A, ReflectionType::B}) {
    const double u = regime_u(t);
    for (long d = 1; d <= 4; ++d) {
      const double start = std::exp(d / (u - 0.1));
      std::vector<long> ns;
      for (double m : {1.01, 3.0, 10.0, 30.0, 100.0}) ns.push_back(std::max(3L, std::lround(m * start)));
      const auto fit = fit_power_decay(t, d, ns);
      bool bounded = true;
      for (long n : ns) {
        bounded = bounded && regime_probabilities(t, n, d).non_absorb <=
                                 fit.c * std::pow(static_cast<double>(n), -fit.delta) * (1.0 + 1e-12);
      }
      obs << to_string(t) << d << ": C " << fmt(fit.c, 3) << " delta " << fmt(fit.delta, 3) << "; ";
      ok = ok && fit.delta > 0.0 && bounded;
    }
  }
  return result("polynomial decay of non-absorption", "n > e^{d/(u - 0.1)}",
                "fitted delta > 0 and non-absorb <= C n^-delta on the grid", obs.str(), ok);
}

CheckResult criterion_clt(const VerifyOptions&) {
  const long n = 5000;
  const double s = 0.5 * std::log(static_cast<double>(n));
  std::ostringstream obs;
  bool ok = true;
  for (double a : {-1.0, 0.0, 1.0}) {
    const long d = std::lround(s + a * std::sqrt(s));
    const double exact = to_double(absorption_probability(WalkFamily::walk_b(n, d)).non_absorb);
    const double phi = normal_cdf(a);
    obs << "a=" << a << " d=" << d << ": " << fmt(exact, 5) << " vs " << fmt(phi, 5) << " (diff "
        << fmt(std::abs(exact - phi), 3) << "); ";
    ok = ok && std::abs(exact - phi) <= 0.05;
  }
  return result("CLT at n = 5000", "central limit theorem for the non-absorption probability",
                "|exact non-absorb - Phi(a)| <= 0.05 for a = -1, 0, 1", obs.str(), ok);
}

CheckResult criterion_large_deviations(const VerifyOptions&) {
  std::ostringstream obs;
  bool ok = true;
  const std::vector<long> ns{10000, 100000, 1000000};
  for (double x : {0.5, 2.0}) {
    const auto rows = asymptotic_table(Regime::large_deviation, ReflectionType::B, ns, x);
    const auto published = asymptotic_table(Regime::large_deviation, ReflectionType::B, ns, x, LdPrefactor::published);
    const double first = std::abs(rows.front().ratio - 1.0);
    const double last = std::abs(rows.back().ratio - 1.0);
    obs << "x=" << x << " ratios " << ratios(rows) << "(published prefactor " << ratios(published) << "); ";
    ok = ok && rows.back().ratio >= 0.5 && rows.back().ratio <= 2.0 && last < first;
  }
  return result("large deviations, B", "sharp large-deviation asymptotics (corrected B prefactor)",
                "ratio at 1e6 in [0.5, 2], |ratio - 1| smaller at 1e6 than at 1e4", obs.str(), ok);
}

CheckResult criterion_fixed_d(const VerifyOptions&) {
  std::ostringstream obs;
  bool ok = true;
  for (auto t : {ReflectionType::A, ReflectionType::B}) {
    for (long d : {2L, 3L}) {
      const auto rows = asymptotic_table(Regime::fixed_dimension, t, {1000, 10000, 100000, 1000000}, d);
      obs << to_string(t) << " d=" << d << ": " << ratios(rows) << "; ";
      ok = ok && ratio_error_decreasing(rows);
    }
  }
  return result("fixed-d asymptotics", "fixed-dimension decay of the non-absorption probability",
                "|ratio - 1| strictly decreasing over n = 1e3..1e6", obs.str(), ok);
}

struct SuiteCheck {
  Suite suite;
  CheckFn run;
};

const std::vector<SuiteCheck>& invariant_checks() {
  static const std::vector<SuiteCheck> checks{
      {Suite::combinatorics, row_sums},
      {Suite::combinatorics, parity_identities},
      {Suite::combinatorics, unimodality},
      {Suite::combinatorics, recurrences},
      {Suite::combinatorics, poisson_binomial_rows},
      {Suite::combinatorics, complement_consistency},
      {Suite::combinatorics, monotonicity},
      {Suite::arrangements, closed_mode_agreement},
      {Suite::arrangements, restriction_consistency},
      {Suite::arrangements, non_generic_bounds},
      {Suite::arrangements, generic_arrangements},
      {Suite::arrangements, charpoly_invariants},
      {Suite::conic, gauss_bonnet},
      {Suite::conic, volumes_from_half_tails},
      {Suite::conic, schlafli_volumes},
      {Suite::conic, projection_inequality},
      {Suite::conic, crofton_all},
      {Suite::simulation, certificate_soundness},
      {Suite::simulation, pairwise_distribution_free},
      {Suite::simulation, lattice_interior_bound},
      {Suite::simulation, other_families},
      {Suite::simulation, seed_determinism},
      {Suite::simulation, d_hull_identity},
      {Suite::asymptotics, normal_cdf_checks},
      {Suite::asymptotics, mod_poisson_checks},
      {Suite::asymptotics, fixed_d_plugin},
      {Suite::asymptotics, fixed_d_trend_d},
      {Suite::asymptotics, ld_half_example},
      {Suite::asymptotics, phase_boundary_check},
      {Suite::asymptotics, power_decay},
  };
  return checks;
}

CheckResult run_timed(const CheckFn& fn, const VerifyOptions& options) {
  const auto start = Clock::now();
  CheckResult r;
  try {
    r = fn(options);
  } catch (const std::exception& e) {
    r.observed = std::string("exception: ") + e.what();
    r.passed = false;
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  // Checks build `observed` piecewise; drop the trailing separator.
  while (!r.observed.empty() && (r.observed.back() == ' ' || r.observed.back() == ';')) r.observed.pop_back();
  return r;
}

}  // namespace

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::combinatorics: return "combinatorics";
    case Suite::arrangements: return "arrangements";
    case Suite::conic: return "conic";
    case Suite::simulation: return "simulation";
    case Suite::asymptotics: return "asymptotics";
    case Suite::all: return "all";
  }
  return "?";
}

Suite parse_suite(std::string_view name) {
  for (auto s : {Suite::combinatorics, Suite::arrangements, Suite::conic, Suite::simulation, Suite::asymptotics,
                 Suite::all}) {
    if (name == to_string(s)) return s;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) +
                              "' (combinatorics, arrangements, conic, simulation, asymptotics, all)");
}

const std::vector<AcceptanceCriterion>& acceptance_criteria() {
  static const std::vector<AcceptanceCriterion> criteria{
      {1, "Sparre Andersen identities", 1.0, Suite::combinatorics, criterion_sparre_andersen},
      {2, "Wendel equivalence", 1.0, Suite::combinatorics, criterion_wendel},
      {3, "region-count oracle", 60.0, Suite::arrangements, criterion_region_oracle},
      {4, "intersected-region oracle", 120.0, Suite::arrangements, criterion_intersection_oracle},
      {5, "Klivans-Swartz", 1.0, Suite::conic, criterion_klivans_swartz},
      {6, "kernel-chamber constancy", 120.0, Suite::simulation, criterion_kernel_chambers},
      {7, "distribution-freeness", 600.0, Suite::simulation, criterion_distribution_free},
      {8, "lattice one-sided bound", 120.0, Suite::simulation, criterion_lattice_bound},
      {9, "Crofton Monte Carlo", 300.0, Suite::conic, criterion_crofton},
      {10, "Steiner Monte Carlo", 120.0, Suite::conic, criterion_steiner},
      {11, "CLT at n = 5000", 60.0, Suite::asymptotics, criterion_clt},
      {12, "large deviations", 60.0, Suite::asymptotics, criterion_large_deviations},
      {13, "fixed-d asymptotics", 30.0, Suite::asymptotics, criterion_fixed_d},
  };
  return criteria;
}

CheckResult run_acceptance(const AcceptanceCriterion& criterion, const VerifyOptions& options) {
  CheckResult r = run_timed(criterion.run, options);
  r.name = "criterion " + std::to_string(criterion.id) + ": " + r.name;
  if (r.seconds > criterion.budget_seconds) {
    r.passed = false;
    r.observed += " [over time budget " + fmt(criterion.budget_seconds) + " s]";
  }
  return r;
}

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& options,
                                   const std::function<void(const CheckResult&)>& progress) {
  std::vector<CheckResult> out;
  auto emit = [&](CheckResult r) {
    if (progress) progress(r);
    out.push_back(std::move(r));
  };
  for (auto s : {Suite::combinatorics, Suite::arrangements, Suite::conic, Suite::simulation, Suite::asymptotics}) {
    if (suite != Suite::all && suite != s) continue;
    for (const auto& c : invariant_checks()) {
      if (c.suite == s) emit(run_timed(c.run, options));
    }
    for (const auto& c : acceptance_criteria()) {
      if (c.suite == s) emit(run_acceptance(c, options));
    }
  }
  return out;
}

std::string format_check(const CheckResult& r, bool with_time) {
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << r.name << "  expected: " << r.expected << "  observed: " << r.observed;
  if (with_time) os << "  (" << fmt(r.seconds, 3) << " s)";
  return os.str();
}

Json report_to_json(const std::vector<CheckResult>& results, bool with_time) {
  Json checks = Json::array();
  long failed = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    Json c{{"name", r.name},
           {"reference", r.reference},
           {"expected", r.expected},
           {"observed", r.observed},
           {"verdict", r.passed ? "pass" : "fail"}};
    if (with_time) c["seconds"] = r.seconds;
    checks.push_back(std::move(c));
  }
  return Json{{"checks", std::move(checks)}, {"passed", static_cast<long>(results.size()) - failed}, {"failed", failed}};
}

}  // namespace weylhull
