// Runs every acceptance criterion once and prints one PASS/FAIL line each.
// Exit status is nonzero when any criterion fails.

#include <iostream>

#include "weylhull/verify.hpp"

int main() {
  weylhull::VerifyOptions options;
  options.samples = 100000;
  int failed = 0;
  for (const auto& criterion : weylhull::acceptance_criteria()) {
    const auto result = weylhull::run_acceptance(criterion, options);
    std::cout << weylhull::format_check(result) << std::endl;
    failed += !result.passed;
  }
  std::cout << weylhull::acceptance_criteria().size() - failed << " passed, " << failed << " failed" << std::endl;
  return failed == 0 ? 0 : 1;
}
