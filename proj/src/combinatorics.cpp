#include "weylhull/combinatorics.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <list>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace weylhull {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double to_double(const Rational& q) { return q.get_d(); }

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

namespace {
const BigInt kZero(0);
}

CoefficientVector::CoefficientVector(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("CoefficientVector: empty coefficient list");
}

const BigInt& CoefficientVector::operator[](long k) const {
  if (k < 0 || k > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

BigInt CoefficientVector::sum() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

BigInt CoefficientVector::parity_tail(long k) const {
  BigInt s = 0;
  if (k < 0) k += ((-k + 1) / 2) * 2;
  for (long j = k; j <= degree(); j += 2) s += coeffs_[static_cast<std::size_t>(j)];
  return s;
}

BigInt CoefficientVector::parity_head(long k) const {
  BigInt s = 0;
  if (k > degree()) k -= ((k - degree() + 1) / 2) * 2;
  for (long j = k; j >= 0; j -= 2) s += coeffs_[static_cast<std::size_t>(j)];
  return s;
}

CoefficientVector expand_linear_factors(std::span<const long> roots) {
  std::vector<BigInt> c(roots.size() + 1);
  c[0] = 1;
  std::size_t deg = 0;
  for (long r : roots) {
    if (r < 0) throw std::invalid_argument("expand_linear_factors: negative root");
    // multiply by (t + r), in place from the top
    ++deg;
    c[deg] = c[deg - 1];
    const unsigned long ur = static_cast<unsigned long>(r);
    for (std::size_t k = deg - 1; k > 0; --k) {
      c[k] *= ur;
      c[k] += c[k - 1];
    }
    c[0] *= ur;
  }
  return CoefficientVector(std::move(c));
}

namespace {

std::atomic<long> g_exact_cap{5000};

std::vector<long> row_roots(RowFamily family, long n) {
  std::vector<long> roots;
  roots.reserve(static_cast<std::size_t>(n));
  switch (family) {
    case RowFamily::stirling:
      for (long i = 0; i < n; ++i) roots.push_back(i);
      break;
    case RowFamily::b_analog:
      for (long i = 1; i <= n; ++i) roots.push_back(2 * i - 1);
      break;
    case RowFamily::d_analog:
      for (long i = 1; i <= n - 1; ++i) roots.push_back(2 * i - 1);
      roots.push_back(n - 1);
      break;
  }
  return roots;
}

class RowCache {
 public:
  explicit RowCache(std::size_t capacity) : capacity_(capacity) {}

  std::shared_ptr<const CoefficientVector> get(RowFamily family, long n) {
    const Key key{family, n};
    {
      std::lock_guard lock(mu_);
      if (auto it = index_.find(key); it != index_.end()) {
        order_.splice(order_.begin(), order_, it->second);
        return it->second->second;
      }
    }
    // Expansion happens outside the lock; a racing writer just wins the insert.
    const auto roots = row_roots(family, n);
    auto row = std::make_shared<const CoefficientVector>(expand_linear_factors(roots));
    std::lock_guard lock(mu_);
    if (auto it = index_.find(key); it != index_.end()) return it->second->second;
    order_.emplace_front(key, row);
    index_[key] = order_.begin();
    while (order_.size() > capacity_) {
      index_.erase(order_.back().first);
      order_.pop_back();
    }
    return row;
  }

  std::size_t size() {
    std::lock_guard lock(mu_);
    return order_.size();
  }

  void clear() {
    std::lock_guard lock(mu_);
    order_.clear();
    index_.clear();
  }

 private:
  using Key = std::pair<RowFamily, long>;
  using Entry = std::pair<Key, std::shared_ptr<const CoefficientVector>>;
  std::size_t capacity_;
  std::mutex mu_;
  std::list<Entry> order_;
  std::map<Key, std::list<Entry>::iterator> index_;
};

RowCache& row_cache() {
  static RowCache cache(64);
  return cache;
}

}  // namespace

long exact_row_cap() { return g_exact_cap.load(); }
void set_exact_row_cap(long cap) { g_exact_cap.store(cap); }

std::shared_ptr<const CoefficientVector> coefficient_row(RowFamily family, long n) {
  const long min_n = family == RowFamily::d_analog ? 2 : 1;
  if (n < min_n) {
    throw std::invalid_argument("coefficient_row: n must be >= " + std::to_string(min_n));
  }
  if (n > exact_row_cap()) {
    throw std::out_of_range("coefficient_row: n = " + std::to_string(n) +
                            " exceeds the exact-mode cap " + std::to_string(exact_row_cap()) +
                            "; use the float path");
  }
  return row_cache().get(family, n);
}

BigInt stirling_unsigned(long n, long k) { return (*coefficient_row(RowFamily::stirling, n))[k]; }
BigInt b_coefficient(long n, long k) { return (*coefficient_row(RowFamily::b_analog, n))[k]; }
BigInt d_coefficient(long n, long k) { return (*coefficient_row(RowFamily::d_analog, n))[k]; }

CoefficientVector product_coefficients(std::span<const long> ns) {
  std::vector<long> roots;
  for (long n : ns) {
    if (n < 1) throw std::invalid_argument("product_coefficients: each n_i must be >= 1");
    for (long i = 1; i <= n; ++i) roots.push_back(2 * i - 1);
  }
  return expand_linear_factors(roots);
}

PoissonBinomialPMF poisson_binomial_pmf(std::span<const double> probs) {
  PoissonBinomialPMF out;
  out.probs.assign(probs.begin(), probs.end());
  out.pmf = poisson_binomial_head(probs, static_cast<long>(probs.size()));
  return out;
}

std::vector<double> poisson_binomial_head(std::span<const double> probs, long max_k) {
  for (double p : probs) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("poisson_binomial: p outside [0,1]");
  }
  const long top = std::min<long>(max_k, static_cast<long>(probs.size()));
  std::vector<double> f(static_cast<std::size_t>(std::max<long>(top, 0) + 1), 0.0);
  f[0] = 1.0;
  long reach = 0;
  for (double p : probs) {
    const double q = 1.0 - p;
    reach = std::min(reach + 1, top);
    for (long k = reach; k > 0; --k) {
      f[static_cast<std::size_t>(k)] = f[static_cast<std::size_t>(k)] * q + f[static_cast<std::size_t>(k - 1)] * p;
    }
    f[0] *= q;
  }
  return f;
}

std::vector<double> row_bernoulli_probs(RowFamily family, long n) {
  std::vector<double> p;
  p.reserve(static_cast<std::size_t>(n));
  switch (family) {
    case RowFamily::stirling:
      for (long i = 1; i <= n; ++i) p.push_back(1.0 / static_cast<double>(i));
      break;
    case RowFamily::b_analog:
      for (long i = 1; i <= n; ++i) p.push_back(1.0 / (2.0 * static_cast<double>(i)));
      break;
    case RowFamily::d_analog:
      for (long i = 1; i <= n - 1; ++i) p.push_back(1.0 / (2.0 * static_cast<double>(i)));
      p.push_back(1.0 / static_cast<double>(n));
      break;
  }
  return p;
}

std::size_t row_cache_size() { return row_cache().size(); }
void clear_row_cache() { row_cache().clear(); }

}  // namespace weylhull
