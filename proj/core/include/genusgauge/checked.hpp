#pragma once

#include <cstdint>

#include "genusgauge/errors.hpp"

namespace gg {

// All integer arithmetic in the library goes through these. The magnitudes
// arising from the supported parameter ranges are far below 2^63, but a user
// can always ask for more; the contract is that overflow is detected and
// reported, never wrapped.

inline std::int64_t add_ck(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline std::int64_t sub_ck(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline std::int64_t mul_ck(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline std::int64_t neg_ck(std::int64_t a) {
    return sub_ck(0, a);
}

// x^n for n >= 0 (checked).
inline std::int64_t pow_ck(std::int64_t x, std::int64_t n) {
    if (n < 0) throw ParamError("pow_ck: negative exponent");
    std::int64_t acc = 1;
    std::int64_t base = x;
    while (n > 0) {
        if (n & 1) acc = mul_ck(acc, base);
        n >>= 1;
        if (n > 0) base = mul_ck(base, base);
    }
    return acc;
}

} // namespace gg
