// Overflow-checked 64-bit integer arithmetic.

#ifndef LIETWIST_CHECKED_HPP_
#define LIETWIST_CHECKED_HPP_

#include <cstdint>
#include <numeric>

#include "lietwist/error.hpp"

namespace lietwist {

using Int = std::int64_t;

inline Int add_checked(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    fail(ErrorCode::Overflow, "integer overflow in addition");
  return r;
}

inline Int sub_checked(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    fail(ErrorCode::Overflow, "integer overflow in subtraction");
  return r;
}

inline Int mul_checked(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(ErrorCode::Overflow, "integer overflow in multiplication");
  return r;
}

inline Int neg_checked(Int a) { return sub_checked(0, a); }

// Floor division, b != 0.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

inline Int floor_mod(Int a, Int b) { return sub_checked(a, mul_checked(floor_div(a, b), b)); }

inline Int gcd_int(Int a, Int b) { return std::gcd(a, b); }

inline Int lcm_checked(Int a, Int b) {
  if (a == 0 || b == 0)
    return 0;
  Int g = std::gcd(a, b);
  Int r = mul_checked(a / g, b);
  return r < 0 ? neg_checked(r) : r;
}

} // namespace lietwist

#endif
