#include "genusgauge/dedekind.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>

#include "genusgauge/checked.hpp"
#include "genusgauge/errors.hpp"
#include "genusgauge/intfun.hpp"

namespace gg {

void check_gparams(std::int64_t k, std::int64_t q) {
    if (k < 1) throw ParamError("g: k must be positive");
    if (gcd64(q, mul_ck(2, k)) != 1)
        throw ParamError("g: q must be coprime to 2k (in particular odd)");
}

// Scaled residue sum: returns 2k * g(2k,q,i) = k(2k-1) - 2 * sum_j [i+qj].
// The residues i, i+q, i+2q, ... are walked by a conditional subtract, so the
// loop is k additions with no division.
static std::int64_t g_num_scaled(std::int64_t k, std::int64_t q, std::int64_t i) {
    std::int64_t p = mul_ck(2, k);
    std::int64_t r = lnr(i, p);
    std::int64_t step = lnr(q, p);
    std::int64_t s = 0;
    for (std::int64_t j = 0; j < k; ++j) {
        s = add_ck(s, r);
        r += step;
        if (r >= p) r -= p;
    }
    return sub_ck(mul_ck(k, p - 1), mul_ck(2, s));
}

Rat g_def(std::int64_t k, std::int64_t q, std::int64_t i) {
    check_gparams(k, q);
    return Rat(g_num_scaled(k, q, i), mul_ck(2, k));
}

Rat g_sign(std::int64_t k, std::int64_t q, std::int64_t i) {
    check_gparams(k, q);
    std::int64_t s = 0;
    std::int64_t m = i;
    for (std::int64_t j = 0; j < k; ++j) {
        s += (floor_div(m, k) & 1) ? -1 : 1;
        if (j + 1 < k) m = add_ck(m, q);
    }
    return Rat(s, 2);
}

std::int64_t g_roots_cap() {
    const char* env = std::getenv("GENUSGAUGE_MAX_K");
    if (env == nullptr || *env == '\0') return 500;
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
        throw ParamError("GENUSGAUGE_MAX_K: must be a positive integer");
    return static_cast<std::int64_t>(v);
}

static std::complex<double> pairwise_sum(const std::complex<double>* a, std::size_t n) {
    if (n <= 8) {
        std::complex<double> s{0.0, 0.0};
        for (std::size_t t = 0; t < n; ++t) s += a[t];
        return s;
    }
    std::size_t h = n / 2;
    return pairwise_sum(a, h) + pairwise_sum(a + h, n - h);
}

double g_roots(std::int64_t k, std::int64_t q, std::int64_t i) {
    check_gparams(k, q);
    std::int64_t cap = g_roots_cap();
    if (k > cap)
        throw CapError("g_roots: k = " + std::to_string(k) + " exceeds cap " +
                       std::to_string(cap) + " (raise GENUSGAUGE_MAX_K to override)");
    std::int64_t p = mul_ck(2, k);
    std::int64_t qr = lnr(q, p);
    std::int64_t er = lnr(i, p) + 1; // exponent of the numerator power

    std::vector<std::complex<double>> terms(static_cast<std::size_t>(k));
    const double pi = 3.14159265358979323846;
    for (std::int64_t m = 0; m < k; ++m) {
        std::int64_t odd = 2 * m + 1; // zeta = exp(i*pi*odd/k), a root of z^k = -1
        auto zpow = [&](std::int64_t t) {
            // zeta^t has order dividing 2k; reduce the exponent before the
            // trig call so large t costs no precision.
            std::int64_t e = fmod_pos(mul_ck(odd, t), p);
            return std::polar(1.0, pi * static_cast<double>(e) / static_cast<double>(k));
        };
        std::complex<double> num = zpow(er);
        std::complex<double> den = (zpow(1) - 1.0) * (zpow(qr) - 1.0);
        terms[static_cast<std::size_t>(m)] = num / den;
    }
    std::complex<double> total = pairwise_sum(terms.data(), terms.size());
    std::complex<double> val = (-2.0 / static_cast<double>(k)) * total;

    double tol = (k <= 200) ? 1e-9 : 1e-7;
    if (std::abs(val.imag()) > tol)
        throw NumericError("g_roots: imaginary residue " + std::to_string(val.imag()) +
                           " exceeds tolerance");
    double exact = g_def(k, q, i).to_double();
    if (std::abs(val.real() - exact) > tol)
        throw NumericError("g_roots: disagrees with the exact value beyond tolerance");
    return val.real();
}

QNorm normalize_q(std::int64_t k, std::int64_t q) {
    check_gparams(k, q);
    std::int64_t p = mul_ck(2, k);
    QNorm n;
    n.q_input = q;
    n.q_reduced = lnr(q, p);
    n.q_star = std::min(n.q_reduced, p - n.q_reduced);
    n.folded = (n.q_star != n.q_reduced);
    return n;
}

// One-step update for the scaled value num(i) = 2k * g(2k,q,i):
//   num(i+1) = num(i) - 2k + 4k * [exists j in [0,k) with i+qj = 2k-1 (mod 2k)]
// because [m+1] - [m] is 1 except at [m] = 2k-1 where it drops by 2k-1. The
// witness j is q^{-1}(2k-1-i) mod 2k, tracked incrementally: it decreases by
// q^{-1} each time i grows by 1.
namespace {
struct GStepper {
    std::int64_t p;    // 2k
    std::int64_t k;
    std::int64_t qinv; // q^{-1} mod 2k
    std::int64_t j0;   // q^{-1}(2k-1-i) mod 2k for the current i
    std::int64_t num;  // 2k * g(2k,q,i)

    GStepper(std::int64_t k_, std::int64_t qr) : p(2 * k_), k(k_) {
        qinv = modinv(qr, p);
        j0 = p - qinv; // q^{-1} * (2k-1) = -q^{-1} (mod 2k)
        num = g_num_scaled(k_, qr, 0);
    }

    // Advance i -> i+1. num stays a genuine table value, so it is bounded by
    // k(2k-1) in magnitude and the plain arithmetic cannot overflow.
    void step() {
        num += (j0 < k) ? p : -p;
        j0 -= qinv;
        if (j0 < 0) j0 += p;
    }
};
} // namespace

Rat big_g(std::int64_t k, std::int64_t q, QNorm* norm) {
    QNorm n = normalize_q(k, q);
    if (norm) *norm = n;
    GStepper st(k, n.q_star);
    std::int64_t best = st.num;
    // The maximum over a full period is attained at some i <= (q*-1)/2.
    std::int64_t half = (n.q_star - 1) / 2;
    for (std::int64_t i = 0; i < half; ++i) {
        st.step();
        if (st.num > best) best = st.num;
    }
    return Rat(best, mul_ck(2, k));
}

Rat big_g_brute(std::int64_t k, std::int64_t q) {
    check_gparams(k, q);
    std::int64_t p = mul_ck(2, k);
    std::int64_t best = g_num_scaled(k, q, 0);
    for (std::int64_t i = 1; i < p; ++i)
        best = std::max(best, g_num_scaled(k, q, i));
    return Rat(best, p);
}

std::vector<std::int64_t> g_scaled_table(std::int64_t k, std::int64_t q) {
    check_gparams(k, q);
    std::int64_t p = mul_ck(2, k);
    std::int64_t qr = lnr(q, p);
    std::vector<std::int64_t> t(static_cast<std::size_t>(p));
    GStepper st(k, qr);
    t[0] = st.num;
    for (std::int64_t i = 1; i < p; ++i) {
        st.step();
        t[static_cast<std::size_t>(i)] = st.num;
    }
    return t;
}

std::int64_t big_n(std::int64_t k, std::int64_t q) {
    QNorm norm = normalize_q(k, q); // validates and folds q into [1, k]
    std::int64_t kk = k;
    std::int64_t qq = norm.q_star;
    std::int64_t n = 1; // the (2,1) base contributes one crosscap
    while (kk > 1) {
        // q = k would force k | gcd(q, 2k) = 1, so q < k strictly here.
        std::int64_t m = kk - qq;
        std::int64_t p2 = mul_ck(2, m);
        std::int64_t qr = lnr(qq, p2);
        qq = std::min(qr, p2 - qr);
        kk = m;
        n = add_ck(n, 1);
    }
    return n;
}

std::int64_t big_i(std::int64_t k, std::int64_t q) {
    check_gparams(k, q);
    if (q <= 0) throw ParamError("big_i: q must be positive");
    std::int64_t kk = k;
    std::int64_t qq = q;
    std::int64_t acc = 0;
    while (!(kk == 1 && qq == 1)) {
        std::int64_t p = mul_ck(2, kk);
        if (qq > p) {
            qq = lnr(qq, p);
        } else if (qq < kk) {
            kk -= qq;
        } else {
            // k < q < 2k; q = k and q = 2k are excluded by coprimality.
            acc = add_ck(acc, qq - kk);
            qq = p - qq;
        }
    }
    return acc;
}

LaurentPoly p_poly(std::int64_t k, std::int64_t q, std::int64_t i) {
    if (k < 1) throw ParamError("p_poly: k must be positive");
    if ((q & 1) == 0) throw ParamError("p_poly: q must be odd");
    // floor_div(i+qj, k) is monotone in j (direction = sign of q), so the
    // canonical sorted term list is a run-length pass, no sorting.
    std::vector<LaurentPoly::Term> runs;
    std::int64_t m = i;
    for (std::int64_t j = 0; j < k; ++j) {
        std::int64_t e = floor_div(m, k);
        if (!runs.empty() && runs.back().first == e)
            ++runs.back().second;
        else
            runs.push_back({e, 1});
        if (j + 1 < k) m = add_ck(m, q);
    }
    if (q < 0) std::reverse(runs.begin(), runs.end());
    return LaurentPoly::from_sorted(std::move(runs));
}

LaurentPoly q_poly(std::int64_t k, std::int64_t j, std::int64_t i) {
    if (k < 1 || j < 1) throw ParamError("q_poly: j and k must be positive");
    if (gcd64(j, k) != 1) throw ParamError("q_poly: j and k must be coprime");
    if (((j ^ k) & 1) == 0) throw ParamError("q_poly: j and k must have opposite parity");
    std::vector<std::int64_t> exps;
    exps.reserve(static_cast<std::size_t>(k));
    std::int64_t m = i;
    for (std::int64_t l = 0; l < k; ++l) {
        exps.push_back(sub_ck(floor_div(m, k), l));
        if (l + 1 < k) m = add_ck(m, j);
    }
    std::sort(exps.begin(), exps.end());
    std::vector<LaurentPoly::Term> runs;
    for (std::int64_t e : exps) {
        if (!runs.empty() && runs.back().first == e)
            ++runs.back().second;
        else
            runs.push_back({e, 1});
    }
    return LaurentPoly::from_sorted(std::move(runs));
}

} // namespace gg
