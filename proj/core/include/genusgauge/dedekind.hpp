#pragma once

#include <cstdint>
#include <vector>

#include "genusgauge/laurent.hpp"
#include "genusgauge/rat.hpp"

namespace gg {

// Generalized Dedekind sums attached to the even modulus p = 2k:
//
//   g(2k,q,i) = (2k-1)/2 - (1/k) * sum_{j=0}^{k-1} [i+qj]     ([m] = lnr(m,2k))
//   G(2k,q)   = max_i g(2k,q,i)
//
// together with the Bredon-Wood minimal-genus recursion N(2k,q), the
// maximizer recursion I(2k,q), and the Laurent-polynomial refinements
// P(2k,q,i) and Q(k,j,i). Throughout, the first argument k is HALF the
// modulus: g_def(k,q,i) evaluates g(2k,q,i).

// Validates k >= 1 and gcd(q, 2k) = 1 (which forces q odd).
void check_gparams(std::int64_t k, std::int64_t q);

// Direct definition: exact rational with denominator dividing 2k.
Rat g_def(std::int64_t k, std::int64_t q, std::int64_t i);

// Sawtooth-sign form: (1/2) * sum_{j=0}^{k-1} (-1)^floor_div(i+qj, k).
// Agrees with g_def on all valid inputs (tested, not assumed).
Rat g_sign(std::int64_t k, std::int64_t q, std::int64_t i);

// Root-of-unity form: -(2/k) * sum over zeta^k = -1 of
// zeta^(i+1) / ((zeta - 1)(zeta^q - 1)), evaluated in double precision with
// pairwise summation. Absolute tolerance 1e-9 for k <= 200 and 1e-7 for
// k <= 500; the result is self-checked against g_def and against a vanishing
// imaginary part at that tolerance (NumericError otherwise). Sizes above the
// cap (default 500, override via env GENUSGAUGE_MAX_K) raise CapError.
double g_roots(std::int64_t k, std::int64_t q, std::int64_t i);

// Cap applied by g_roots: GENUSGAUGE_MAX_K if set (positive integer), else 500.
std::int64_t g_roots_cap();

// How q was normalized for the maximum/recursion routines: reduce mod 2k into
// (0, 2k), then fold q -> min(q, 2k-q), which preserves G by the negation
// identity. The fold is reported so callers can see which representative ran.
struct QNorm {
    std::int64_t q_input = 0;   // as given
    std::int64_t q_reduced = 0; // lnr(q, 2k)
    std::int64_t q_star = 0;    // min(q_reduced, 2k - q_reduced), in [1, k]
    bool folded = false;        // q_star != q_reduced
};

QNorm normalize_q(std::int64_t k, std::int64_t q);

// G(2k,q) = max_i g(2k,q,i), exact. Fast path: normalize q to q* <= k, then
// scan only i in [0, (q*-1)/2] (the maximizer lands there) with an O(1)
// update per step, for O(k + q*) total. Optional out-parameter reports the
// normalization.
Rat big_g(std::int64_t k, std::int64_t q, QNorm* norm = nullptr);

// Independent route for cross-checking big_g: maximize g_def over one full
// period i in [0, 2k), each value computed from scratch. O(k^2).
Rat big_g_brute(std::int64_t k, std::int64_t q);

// Bredon-Wood minimal genus N(2k,q): N(2,1) = 1 and
// N(2k,q) = N(2(k-q), q') + 1 where q' is the representative of +-q
// mod 2(k-q) in [1, k-q]; q is first normalized to [1, k] the same way.
std::int64_t big_n(std::int64_t k, std::int64_t q);

// Maximizer recursion I(2k,q) for q > 0:
//   I(2,1) = 0
//   I(2k,q) = I(2k, lnr(q,2k))        for q > 2k
//   I(2k,q) = I(2(k-q), q)            for q < k
//   I(2k,q) = I(2k, 2k-q) + q - k     for k < q < 2k
// The result satisfies 0 <= I <= (q-1)/2 and g(2k,q,I) = G(2k,q) (tested).
std::int64_t big_i(std::int64_t k, std::int64_t q);

// P(2k,q,i) = sum_{j=0}^{k-1} u^floor_div(i+qj, k). Requires k >= 1 and q
// odd; coprimality is NOT required. eval_sign() of the result is 2*g when
// gcd(q,2k) = 1, and eval at u=1 counts the k terms.
LaurentPoly p_poly(std::int64_t k, std::int64_t q, std::int64_t i);

// Q(k,j,i) = sum_{l=0}^{k-1} u^(floor_div(i+jl, k) - l) for positive coprime
// j, k of opposite parity. Coincides with p_poly(k, j-k, i) term by term.
LaurentPoly q_poly(std::int64_t k, std::int64_t j, std::int64_t i);

// Scaled value table for one period: entry r in [0, 2k) holds 2k * g(2k,q,r)
// as an integer. Built with the O(1) consecutive-index update; the direct
// definition seeds entry 0. Backbone of the grid verifiers.
std::vector<std::int64_t> g_scaled_table(std::int64_t k, std::int64_t q);

} // namespace gg
