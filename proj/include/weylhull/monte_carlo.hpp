#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "weylhull/rng.hpp"

namespace weylhull {

/// Samples are split over this many fixed streams, so tallies depend only on
/// (seed, samples) and never on how many workers run them.
inline constexpr std::uint64_t kMonteCarloStreams = 64;

struct MCEstimate {
  double p_hat = 0.0;
  double stderr_ = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double ambiguous_fraction = 0.0;

  /// Binomial proportion `hits / samples`, scaled by `scale` (e.g. 1/2 for half-tails).
  static MCEstimate from_counts(std::uint64_t hits, std::uint64_t samples, std::uint64_t seed,
                                std::uint64_t ambiguous = 0, double scale = 1.0);

  /// (p_hat - exact) / stderr; infinite when stderr is 0 and the values differ.
  double z_score(double exact) const;

  friend bool operator==(const MCEstimate&, const MCEstimate&) = default;
};

/// --threads value if given, else WEYLHULL_THREADS, else the hardware concurrency.
unsigned resolve_threads(std::optional<unsigned> requested);

/// Runs `body(rng, count)` once per stream, with stream s drawing its share of
/// `samples` from PhiloxStream(seed, s), and sums the returned tallies in stream order.
template <class Tally, class Body>
Tally run_streams(std::uint64_t samples, std::uint64_t seed, unsigned threads, Body body) {
  std::vector<Tally> tallies(kMonteCarloStreams);
  std::vector<std::exception_ptr> errors(kMonteCarloStreams);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t s = next++; s < kMonteCarloStreams; s = next++) {
      const std::uint64_t count = samples / kMonteCarloStreams + (s < samples % kMonteCarloStreams ? 1 : 0);
      try {
        PhiloxStream rng(seed, s);
        tallies[s] = body(rng, count);
      } catch (...) {
        errors[s] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads && t < kMonteCarloStreams; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Tally total{};
  for (auto& t : tallies) total += t;
  return total;
}

}  // namespace weylhull
