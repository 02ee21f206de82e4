#include "weylhull/reflection.hpp"

#include <stdexcept>
#include <string>

namespace weylhull {

std::string_view to_string(ReflectionType type) {
  switch (type) {
    case ReflectionType::A: return "A";
    case ReflectionType::B: return "B";
    case ReflectionType::D: return "D";
  }
  return "?";
}

ReflectionType parse_reflection_type(std::string_view name) {
  if (name == "A" || name == "a") return ReflectionType::A;
  if (name == "B" || name == "b") return ReflectionType::B;
  if (name == "D" || name == "d") return ReflectionType::D;
  throw std::invalid_argument("unknown reflection type '" + std::string(name) + "' (expected A, B or D)");
}

void check_reflection_rank(ReflectionType type, long n) {
  const long min_n = type == ReflectionType::B ? 1 : 2;
  if (n < min_n) {
    throw std::invalid_argument("type " + std::string(to_string(type)) + " needs n >= " + std::to_string(min_n) +
                                ", got " + std::to_string(n));
  }
}

BigInt group_order(ReflectionType type, long n) {
  check_reflection_rank(type, n);
  const auto un = static_cast<unsigned long>(n);
  switch (type) {
    case ReflectionType::A: return factorial(un);
    case ReflectionType::B: return pow2(un) * factorial(un);
    case ReflectionType::D: return pow2(un - 1) * factorial(un);
  }
  return 0;
}

}  // namespace weylhull
