#pragma once

#include <cstdint>
#include <numeric>

#include "genusgauge/checked.hpp"
#include "genusgauge/errors.hpp"

namespace gg {

// Floor division toward -infinity, b > 0. C++ '/' truncates toward zero,
// which is wrong for negative a.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    if (b <= 0) throw ParamError("floor_div: divisor must be positive");
    std::int64_t q = a / b;
    if ((a % b) != 0 && a < 0) --q;
    return q;
}

// Least nonnegative residue [m] with 0 <= [m] < p, for positive even p.
// Correct for negative m.
inline std::int64_t lnr(std::int64_t m, std::int64_t p) {
    if (p <= 0 || (p & 1)) throw ParamError("lnr: modulus must be positive and even");
    std::int64_t r = m % p;
    if (r < 0) r += p;
    return r;
}

// Internal floor-mod for arbitrary positive modulus (mixed-radix index math,
// spin^c index bookkeeping). Not the public residue operation.
inline std::int64_t fmod_pos(std::int64_t m, std::int64_t p) {
    if (p <= 0) throw ParamError("fmod_pos: modulus must be positive");
    std::int64_t r = m % p;
    if (r < 0) r += p;
    return r;
}

// Inverse of a modulo m (m >= 1, gcd(a, m) = 1), returned in [0, m).
// Extended Euclid on the reduced residue; coefficients stay below m in
// magnitude, so no overflow for any valid m.
inline std::int64_t modinv(std::int64_t a, std::int64_t m) {
    if (m < 1) throw ParamError("modinv: modulus must be positive");
    std::int64_t r0 = fmod_pos(a, m), r1 = m;
    std::int64_t s0 = 1, s1 = 0;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw ParamError("modinv: arguments not coprime");
    return fmod_pos(s0, m);
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    unsigned long long ua = a < 0 ? 0ULL - static_cast<unsigned long long>(a)
                                  : static_cast<unsigned long long>(a);
    unsigned long long ub = b < 0 ? 0ULL - static_cast<unsigned long long>(b)
                                  : static_cast<unsigned long long>(b);
    return static_cast<std::int64_t>(std::gcd(ua, ub));
}

} // namespace gg
