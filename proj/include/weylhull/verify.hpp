#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylhull/rng.hpp"
#include "weylhull/serialize.hpp"

namespace weylhull {

struct CheckResult {
  std::string name;
  /// The identity or theorem being exercised, in words.
  std::string reference;
  std::string expected;
  std::string observed;
  bool passed = false;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::uint64_t samples = 100000;
  std::uint64_t seed = kDefaultSeed;
  std::optional<unsigned> threads;
};

enum class Suite { combinatorics, arrangements, conic, simulation, asymptotics, all };
std::string_view to_string(Suite suite);
Suite parse_suite(std::string_view name);

using CheckFn = std::function<CheckResult(const VerifyOptions&)>;

/// One acceptance criterion: `run` does the work, and the verdict also
/// requires the wall time to stay within `budget_seconds`.
struct AcceptanceCriterion {
  int id = 0;
  std::string title;
  double budget_seconds = 0.0;
  Suite suite = Suite::all;
  CheckFn run;
};

const std::vector<AcceptanceCriterion>& acceptance_criteria();

/// Runs one criterion, timing it and folding the time budget into the verdict.
CheckResult run_acceptance(const AcceptanceCriterion& criterion, const VerifyOptions& options);

/// Every invariant check of `suite` plus the acceptance criteria that belong to it.
/// `progress` sees each result as soon as it is available.
std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& options,
                                   const std::function<void(const CheckResult&)>& progress = {});

/// "PASS name  expected: ...  observed: ...  (t s)"; timings make output
/// vary between runs, so they are optional.
std::string format_check(const CheckResult& result, bool with_time = true);

Json report_to_json(const std::vector<CheckResult>& results, bool with_time = true);

}  // namespace weylhull
