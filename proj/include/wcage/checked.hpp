#pragma once

#include <stdexcept>

namespace wcage {

inline long long checked_add(long long x, long long y) {
  long long r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline long long checked_sub(long long x, long long y) {
  long long r;
  if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline long long checked_mul(long long x, long long y) {
  long long r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline long long checked_pow(long long x, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, x);
  return r;
}

}  // namespace wcage
