#pragma once

#include <cstdint>

#include "bowvar/error.hpp"

namespace bowvar {

using i64 = std::int64_t;

// All exponent and coefficient arithmetic in the character ring goes through
// these helpers; silent wraparound would corrupt weights without any visible
// symptom, so overflow is a hard error.
inline i64 checked_add(i64 a, i64 b) {
  i64 out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::ExponentOverflow, "addition overflowed 64 bits");
  }
  return out;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 out = 0;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw Error(ErrorKind::ExponentOverflow, "subtraction overflowed 64 bits");
  }
  return out;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::ExponentOverflow, "multiplication overflowed 64 bits");
  }
  return out;
}

inline i64 checked_negate(i64 a) { return checked_sub(0, a); }

}  // namespace bowvar
