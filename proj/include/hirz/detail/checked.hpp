#pragma once

#include <cstdint>

#include "hirz/errors.hpp"

// Overflow-checked 64-bit arithmetic. Lattice coordinates live in int64;
// anything that would wrap throws instead.
namespace hirz::detail {

inline std::int64_t add(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_add_overflow(x, y, &out)) throw OverflowError("addition");
  return out;
}

inline std::int64_t sub(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_sub_overflow(x, y, &out)) throw OverflowError("subtraction");
  return out;
}

inline std::int64_t mul(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_mul_overflow(x, y, &out)) throw OverflowError("multiplication");
  return out;
}

inline std::int64_t neg(std::int64_t x) { return sub(0, x); }

/// Mathematical floor of x / y for y > 0.
inline std::int64_t floor_div(std::int64_t x, std::int64_t y) {
  std::int64_t q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

}  // namespace hirz::detail
