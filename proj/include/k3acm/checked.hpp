#pragma once

#include <cstdint>

#include "k3acm/errors.hpp"

namespace k3acm {

// All lattice arithmetic is exact 64-bit integer arithmetic; any overflow is a
// hard error, never silent wraparound.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::overflow, "integer addition overflow");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::overflow, "integer subtraction overflow");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::overflow, "integer multiplication overflow");
    return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

// Floor/ceil division for possibly negative numerators (denominator > 0).
inline Int floor_div(Int a, Int b) {
    Int q = a / b, r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

inline Int ceil_div(Int a, Int b) {
    Int q = a / b, r = a % b;
    return (r != 0 && (r < 0) == (b < 0)) ? q + 1 : q;
}

// Floor of sqrt(n) for n >= 0, exact.
inline Int isqrt_floor(Int n) {
    if (n < 0) fail(ErrorCode::internal_inconsistency, "isqrt of negative");
    if (n == 0) return 0;
    Int r = static_cast<Int>(__builtin_sqrtl(static_cast<long double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

} // namespace k3acm
