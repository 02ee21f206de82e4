#include "weylhull/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace weylhull {

MCEstimate MCEstimate::from_counts(std::uint64_t hits, std::uint64_t samples, std::uint64_t seed,
                                   std::uint64_t ambiguous, double scale) {
  MCEstimate e;
  e.samples = samples;
  e.seed = seed;
  if (samples == 0) return e;
  const double n = static_cast<double>(samples);
  const double q = static_cast<double>(hits) / n;
  e.p_hat = scale * q;
  e.stderr_ = scale * std::sqrt(q * (1.0 - q) / n);
  e.ci_lo = std::max(0.0, e.p_hat - 1.96 * e.stderr_);
  e.ci_hi = std::min(scale, e.p_hat + 1.96 * e.stderr_);
  e.ambiguous_fraction = static_cast<double>(ambiguous) / n;
  return e;
}

double MCEstimate::z_score(double exact) const {
  const double diff = p_hat - exact;
  if (stderr_ > 0.0) return diff / stderr_;
  if (diff == 0.0) return 0.0;
  return diff > 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
}

unsigned resolve_threads(std::optional<unsigned> requested) {
  if (requested && *requested > 0) return *requested;
  if (const char* env = std::getenv("WEYLHULL_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace weylhull
