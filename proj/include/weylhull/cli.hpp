#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylhull {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name), writing results to `out`
/// and diagnostics to `err`. Returns the process exit code.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylhull
