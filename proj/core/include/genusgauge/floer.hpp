#pragma once

#include <cstdint>

#include "genusgauge/abgroup.hpp"
#include "genusgauge/dedekind.hpp"
#include "genusgauge/rat.hpp"

namespace gg {

// Correction-term closed forms for the three boundary families that the
// feasibility checkers consume: lens spaces L(2k,1) (absolute values and
// twist differences), the circle bundles Q over a non-orientable genus-h
// surface with normal Euler number e, and #^n S^1 x S^2.

// The four torsion spin^c labels on the circle bundle: t0/t1 do not extend
// over the disk bundle, u0/u1 do. The labels are symbolic; every downstream
// check is invariant under swapping t0 with t1.
enum class SpincQLabel { T0, T1, U0, U1 };

// Kernel/cokernel variants of the correction term when b_1 > 0.
enum class Which { Bot, Top };

// L(p,q) with even p = 2k; q is stored as its least positive residue.
struct LensSpace {
    std::int64_t p = 2;       // even order of H_1
    std::int64_t q = 1;       // normalized to 0 < q < p
    std::int64_t q_input = 1; // as given

    LensSpace(std::int64_t p_, std::int64_t q_);
};

// Circle bundle over the non-orientable closed surface of genus h with
// normal Euler number e.
struct BundleQ {
    std::int64_t h = 1;
    std::int64_t e = 0;

    BundleQ(std::int64_t h_, std::int64_t e_);
};

// d(L(2k,1), s) = 1/4 - (s-k)^2 / (2k), with s reduced mod 2k.
Rat d_lens_2k1(std::int64_t k, std::int64_t s);

// Twist difference of d-invariants on -L(2k,q) across the order-2 class:
// equals g(2k,q,i) exactly.
Rat d_diff_half(std::int64_t k, std::int64_t q, std::int64_t i);

// Relative step between consecutive spin^c indices on -L(p,q):
// d at index i+q minus d at index i equals (p-1-2i)/p for 0 <= i < p.
// Composing k steps along i, i+q, ... (indices reduced mod p = 2k each
// time) telescopes to d_diff_half.
Rat d_step(std::int64_t p, std::int64_t q, std::int64_t i);

// Maximal d-difference under the order-2 twist: Delta(L(2k,q)) = G(2k,q).
Rat delta_lens(std::int64_t k, std::int64_t q);

// d(L(2k,1), s+k) - d(L(2k,1), s) = k/2 - s for 0 <= s <= k-1; its maximum
// over s is delta_lens(k, 1).
Rat d_lens_2k1_twist_diff(std::int64_t k, std::int64_t s);

// Correction terms of the circle bundle at the four torsion labels.
// Non-extendible t_a: for h odd, d_bot = d_top = (e-2)/4 + a; for h even,
// d_bot(t_a) = (e-2)/4 + a while d_top(t_a) = (e-2)/4 + (1-a).
// Extendible u_a: d_bot = -(h-1)/2 and d_top = (h-1)/2, for both a.
Rat q_bundle_d(std::int64_t h, std::int64_t e, SpincQLabel label, Which which);

// d of #^n S^1 x S^2 in its torsion spin^c structure: +-n/2.
Rat s1s2_d(std::int64_t n, Which which);

// H_1 of the circle bundle: rank h-1 with torsion Z/2 + Z/2 for even e and
// Z/4 for odd e.
AbGroup h1_of_q(std::int64_t h, std::int64_t e);

// dim_{Z/2} H^1(Q; Z/2): h+1 for even e, h for odd e.
std::int64_t h1_z2_dim(std::int64_t h, std::int64_t e);

} // namespace gg
