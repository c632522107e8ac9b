#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "genusgauge/floer.hpp"
#include "genusgauge/rat.hpp"

namespace gg {

// Feasibility checkers for a non-orientable surface of genus h with normal
// Euler number e. Every checker tests necessary conditions ("feasible" means
// "not obstructed by the implemented bounds"); the lens-space checker alone
// is an exact if-and-only-if, and its verdicts say so via the exact flag.

enum class PhiRestriction { Trivial, Nontrivial, Unknown };

struct Verdict {
    bool feasible = false;
    bool exact = false; // true when the test is if-and-only-if (lens context)
    std::vector<std::string> violated; // every failed condition, named
    std::vector<std::pair<std::string, std::string>> certificate; // construction data
};

// Signature-defect inputs for the G-signature bound. The checker consumes
// the difference rho_alphatau - rho_alpha as given; computing rho from
// 3-manifold data is out of scope.
struct RhoInput {
    Rat rho_alpha;
    Rat rho_alphatau;
    std::int64_t kpow = 0; // the representation image is Z_{2^kpow}; 0 means untwisted bound 2h
};

// A d-invariant table over a finite abelian group presented in mixed radix:
// values[i] belongs to the group element whose little-endian digits are the
// expansion of i by orders (first order is the fastest-varying digit).
struct DTable {
    std::vector<std::int64_t> orders;
    std::vector<Rat> values;
};

// Genus/Euler bounds from the d-invariant jump Delta across a homology
// cobordism: h >= 2*Delta (sharpened to h >= 2*Delta + 1 when the parity of
// h and the restriction of the twisting class mismatch as stated), plus
// |e| <= 2h - 4*Delta and e == 2h - 4*Delta (mod 4). Delta must be
// half-integral. Unknown restriction applies only the unsharpened bound.
Verdict mbound_check(const Rat& delta, std::int64_t h, std::int64_t e, PhiRestriction phi);

// Exact feasibility in L(2k,q) x I: with N = big_n(k,q), feasible iff
// h >= N, |e| <= 2(h-N), e == 2(h-N) (mod 4). Feasible verdicts carry the
// construction: the genus-N base surface plus (2l+e)/4 and (2l-e)/4 copies
// of RP^2 with Euler number +2 / -2, where l = h - N.
Verdict lens_feasible(std::int64_t k, std::int64_t q, std::int64_t h, std::int64_t e);

// The residue class mod 4 that e must satisfy: (2*k_c + 2h) mod 4.
std::int64_t euler_congruence(std::int64_t k_c, std::int64_t h);

// Self-linking parity of the order-2 class in L(2k,q): reduces to k mod 2
// (convention-independent).
std::int64_t k_c_lens(std::int64_t k, std::int64_t q);

// d-invariant sandwich for a surface in a cobordism with circle-bundle
// neighborhood boundary: checks
//   d_top(Q_{h,e}, t) - (h-1)/2 <= d1_twisted - d0 <= d_bot(Q_{h,e}, t) + (h-1)/2
// and that the three quantities are pairwise congruent mod 2. Only the
// non-extendible labels T0/T1 are admissible.
bool twist_bound_holds(const Rat& d0, const Rat& d1_twisted, std::int64_t h,
                       std::int64_t e, SpincQLabel label);

// Necessary condition for a smooth essential RP^2: some s0 must satisfy
// d(s + phi) - d(s) = 1/2 for every s in s0 + K. By default K is the
// subgroup of doubled elements {2x}; pass the subgroup explicitly for
// non-cyclic tables where a different restriction kernel is intended.
// phi_shift must be an order-2 element (flat index).
bool rp2_test(const DTable& table, std::int64_t phi_shift,
              const std::vector<std::int64_t>* subgroup = nullptr);

// Rational-genus value for the order-2 class in L(2k,q): (N-2)/2, which
// satisfies delta_lens = 1 + theta_lens.
Rat theta_lens(std::int64_t k, std::int64_t q);

// rho-invariant of the circle bundle for any twisted representation: -e/2,
// stated for even e only.
Rat rho_q_bundle(std::int64_t h, std::int64_t e);

// G-signature bound: with D = rho_alphatau - rho_alpha and B = 2^kpow * h
// (kpow >= 1) or B = 2h (kpow = 0), checks -B <= D + e/2 <= B. e must be
// even (spin normal-bundle hypothesis).
bool gsign_check(const RhoInput& rho, std::int64_t h, std::int64_t e);

// Region bound from |rho|: h >= |rho|/2 and |e| <= 2(2h - |rho|); follows
// from gsign_check applied with both signs of D.
Verdict rho_bound(const Rat& rho_tau_abs, std::int64_t h, std::int64_t e);

// Closed positive-definite ambient 4-manifold (b_2 = b, integral lift of the
// surface class with minimal self-intersection l, 0 <= l <= b): checks
// e == l - 2h (mod 4), e >= l - 2h, and when l = b >= 1 also
// e <= 9b + 10h - 16.
Verdict definite_check(std::int64_t b, std::int64_t l, std::int64_t h, std::int64_t e);

// Closed spin ambient 4-manifold, characteristic surface, sigma >= 0:
// searches k in [0, h] for e' = e + 2h - 4k with e' == sigma (mod 16),
// e' <= sigma + 8(b+ + h - 2), and the stated lower-bound conditions for
// e' < 0 and e' = 0. Feasible verdicts record the witness k and the
// auxiliary closed-up manifold data (sigma_Z, b2_Z) = (-e', h-1+|e'| or h+1).
Verdict spin_check(std::int64_t sigma, std::int64_t bplus, std::int64_t bminus,
                   std::int64_t h, std::int64_t e);

// Corollary form of the spin bound: e == sigma + 2h (mod 4) and
// min(-2h, sigma - 8(b- - 2) - 10h) <= e <= max(2h, sigma + 8(b+ - 2) + 10h).
// Implied by spin_check (tested), never sharper.
Verdict spin_cor(std::int64_t sigma, std::int64_t bplus, std::int64_t bminus,
                 std::int64_t h, std::int64_t e);

// Closed-up form for S^4 (both orientations of the definite test):
// |e| <= 2h and e == 2h (mod 4).
Verdict sphere_feasible(std::int64_t h, std::int64_t e);

} // namespace gg
