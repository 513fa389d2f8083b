#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace fencetile {

// Arbitrary-precision integer used for every count in the library.
// Counts are non-negative; the type is signed so that identity sides
// containing subtractions (e.g. f_n^2 - 1) can be formed without wrapping.
using BigNat = boost::multiprecision::cpp_int;

// Binomial coefficient with the single convention used everywhere:
// zero whenever b < 0 or a < b (negative a included).
BigNat binomial(std::int64_t a, std::int64_t b);

// Exact floor/ceiling of a/d for d > 0, correct for negative a.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t d) {
  std::int64_t q = a / d;
  if ((a % d != 0) && (a < 0)) --q;
  return q;
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t d) {
  std::int64_t q = a / d;
  if ((a % d != 0) && (a > 0)) ++q;
  return q;
}

}  // namespace fencetile
