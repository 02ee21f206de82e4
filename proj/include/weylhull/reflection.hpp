#pragma once

#include <string>
#include <string_view>

#include "weylhull/bigint.hpp"

namespace weylhull {

/// Reflection group type. `A` with parameter n means A_{n-1} acting on R^n.
enum class ReflectionType { A, B, D };

std::string_view to_string(ReflectionType type);
ReflectionType parse_reflection_type(std::string_view name);

/// Throws std::invalid_argument when n is too small for the type (A, D: n >= 2; B: n >= 1).
void check_reflection_rank(ReflectionType type, long n);

/// n!, 2^n n!, 2^{n-1} n!.
BigInt group_order(ReflectionType type, long n);

}  // namespace weylhull
