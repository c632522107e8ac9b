#include "genusgauge/floer.hpp"

#include "genusgauge/checked.hpp"
#include "genusgauge/errors.hpp"
#include "genusgauge/intfun.hpp"

namespace gg {

LensSpace::LensSpace(std::int64_t p_, std::int64_t q_) : p(p_), q_input(q_) {
    if (p < 2 || (p & 1)) throw ParamError("LensSpace: p must be even and >= 2");
    if (gcd64(q_, p) != 1) throw ParamError("LensSpace: q must be coprime to p");
    q = lnr(q_, p);
}

BundleQ::BundleQ(std::int64_t h_, std::int64_t e_) : h(h_), e(e_) {
    if (h < 1) throw ParamError("BundleQ: genus h must be positive");
}

Rat d_lens_2k1(std::int64_t k, std::int64_t s) {
    if (k < 1) throw ParamError("d_lens_2k1: k must be positive");
    std::int64_t sr = lnr(s, mul_ck(2, k));
    std::int64_t d = sr - k; // |d| <= k
    return Rat(1, 4) - Rat(mul_ck(d, d), mul_ck(2, k));
}

Rat d_diff_half(std::int64_t k, std::int64_t q, std::int64_t i) {
    return g_def(k, q, i);
}

Rat d_step(std::int64_t p, std::int64_t q, std::int64_t i) {
    if (p < 1) throw ParamError("d_step: p must be positive");
    if (gcd64(q, p) != 1) throw ParamError("d_step: q must be coprime to p");
    if (i < 0 || i >= p) throw ParamError("d_step: index must satisfy 0 <= i < p");
    return Rat(sub_ck(p - 1, mul_ck(2, i)), p);
}

Rat delta_lens(std::int64_t k, std::int64_t q) {
    return big_g(k, q);
}

Rat d_lens_2k1_twist_diff(std::int64_t k, std::int64_t s) {
    if (k < 1) throw ParamError("d_lens_2k1_twist_diff: k must be positive");
    if (s < 0 || s > k - 1)
        throw ParamError("d_lens_2k1_twist_diff: s must satisfy 0 <= s <= k-1");
    return Rat(sub_ck(k, mul_ck(2, s)), 2);
}

Rat q_bundle_d(std::int64_t h, std::int64_t e, SpincQLabel label, Which which) {
    if (h < 1) throw ParamError("q_bundle_d: genus h must be positive");
    switch (label) {
        case SpincQLabel::U0:
        case SpincQLabel::U1:
            return which == Which::Bot ? Rat(-(h - 1), 2) : Rat(h - 1, 2);
        case SpincQLabel::T0:
        case SpincQLabel::T1: {
            std::int64_t a = (label == SpincQLabel::T1) ? 1 : 0;
            // d_top at even h swaps the roles of the two labels.
            if (h % 2 == 0 && which == Which::Top) a = 1 - a;
            return Rat(sub_ck(e, 2), 4) + Rat(a);
        }
    }
    throw ParamError("q_bundle_d: unknown label");
}

Rat s1s2_d(std::int64_t n, Which which) {
    if (n < 0) throw ParamError("s1s2_d: n must be nonnegative");
    return which == Which::Bot ? Rat(neg_ck(n), 2) : Rat(n, 2);
}

AbGroup h1_of_q(std::int64_t h, std::int64_t e) {
    if (h < 1) throw ParamError("h1_of_q: genus h must be positive");
    if ((e & 1) == 0) return AbGroup(h - 1, {2, 2});
    return AbGroup(h - 1, {4});
}

std::int64_t h1_z2_dim(std::int64_t h, std::int64_t e) {
    if (h < 1) throw ParamError("h1_z2_dim: genus h must be positive");
    return (e & 1) == 0 ? add_ck(h, 1) : h;
}

} // namespace gg
