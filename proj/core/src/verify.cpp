#include "genusgauge/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "genusgauge/dedekind.hpp"
#include "genusgauge/floer.hpp"
#include "genusgauge/intfun.hpp"
#include "genusgauge/obstruct.hpp"
#include "genusgauge/parallel.hpp"
#include "genusgauge/rat.hpp"

namespace gg::verify {

static std::string loc(const char* id, std::int64_t k, std::int64_t q) {
    return std::string(id) + " at k=" + std::to_string(k) + " q=" + std::to_string(q);
}

static std::string loc(const char* id, std::int64_t k, std::int64_t q, std::int64_t i) {
    return loc(id, k, q) + " i=" + std::to_string(i);
}

Report two_g_chunk(std::int64_t k, std::int64_t brute_max) {
    Report r;
    std::int64_t p = 2 * k;
    for (std::int64_t q = 1; q < p; q += 2) {
        if (gcd64(q, p) != 1) continue;
        Rat big = big_g(k, q);
        std::int64_t n = big_n(k, q);
        r.check(Rat(2) * big == Rat(n), loc("2G != N", k, q));
        r.check(fmod_pos(n - k, 2) == 0, loc("N parity != k parity", k, q));
        if (p <= brute_max)
            r.check(big_g_brute(k, q) == big, loc("fast G != brute G", k, q));
    }
    return r;
}

Report identities_chunk(std::int64_t k, std::int64_t max) {
    Report r;
    const std::int64_t p = 2 * k;
    const Rat half(1, 2);

    for (std::int64_t q = 1; q < p; q += 2) {
        if (gcd64(q, p) != 1) continue;
        std::vector<std::int64_t> t = g_scaled_table(k, q);
        std::vector<std::int64_t> tneg = g_scaled_table(k, p - q);

        for (std::int64_t i = 0; i < p; ++i) {
            // negation: g(2k,-q,i) = g(2k,q,i+q+k)
            r.check(tneg[static_cast<std::size_t>(i)] ==
                        t[static_cast<std::size_t>(lnr(i + q + k, p))],
                    loc("negation", k, q, i));
            // step: g(2k,q,i) - g(2k,q,i+q) = (-1)^floor(i/k)
            std::int64_t want = (i < k) ? p : -p;
            r.check(t[static_cast<std::size_t>(i)] -
                            t[static_cast<std::size_t>(lnr(i + q, p))] ==
                        want,
                    loc("step", k, q, i));
            // antisymmetry: g(2k,q,i+k) = -g(2k,q,i)
            r.check(t[static_cast<std::size_t>(lnr(i + k, p))] ==
                        -t[static_cast<std::size_t>(i)],
                    loc("antisymmetry", k, q, i));
            // palindrome: g(2k,q,i) = g(2k,q,q-1-i)
            r.check(t[static_cast<std::size_t>(lnr(q - 1 - i, p))] ==
                        t[static_cast<std::size_t>(i)],
                    loc("palindrome", k, q, i));
        }

        // maximizer location: some argmax lies in [0, (q-1)/2]
        std::int64_t best = *std::max_element(t.begin(), t.end());
        bool found = false;
        for (std::int64_t i = 0; i <= (q - 1) / 2 && !found; ++i)
            found = (t[static_cast<std::size_t>(i)] == best);
        r.check(found, loc("maximizer location", k, q));

        // genus recursion for the maximum: G(2(k+q),q) = G(2k,q) + 1/2, q > 0
        if (q <= max)
            r.check(big_g(k + q, q) == big_g(k, q) + half, loc("G recursion", k, q));
    }

    // value recursion and polynomial recursion, q possibly negative with k+q > 0
    for (std::int64_t q = -k + 1; q <= max; ++q) {
        if (q == 0 || (q & 1) == 0) continue;

        if (gcd64(q, p) == 1) {
            std::vector<std::int64_t> ta = g_scaled_table(k, q);
            std::vector<std::int64_t> tb = g_scaled_table(k + q, q);
            std::int64_t pb = 2 * (k + q);
            for (std::int64_t i = -k; i < k + q; ++i)
                r.check(Rat(tb[static_cast<std::size_t>(lnr(i, pb))], pb) ==
                            Rat(ta[static_cast<std::size_t>(lnr(i, p))], p) + half,
                        loc("g recursion", k, q, i));
        }

        LaurentPoly gs = geom_sum(q);
        for (std::int64_t i = -k; i < k + q; ++i)
            r.check(p_poly(k + q, q, i) - p_poly(k, q, i) == gs,
                    loc("P recursion", k, q, i));
    }

    // polynomial reversal: P(2k,q,i) = u^q P(2k,-q,i-q)
    for (std::int64_t q = 1; q <= max; q += 2)
        for (std::int64_t i = -k - q; i < k + q; ++i)
            r.check(p_poly(k, q, i) == p_poly(k, -q, i - q).mul_monomial(1, q),
                    loc("P reversal", k, q, i));

    // reciprocity: g(2j,k-j,i)/scale + g(2k,j-k,i)/scale = 1/2 for 0 <= i < j+k
    for (std::int64_t j = 1; j <= max; ++j) {
        if (gcd64(j, k) != 1 || (((j ^ k) & 1) == 0)) continue;
        std::vector<std::int64_t> tj = g_scaled_table(j, k - j);
        std::vector<std::int64_t> tk = g_scaled_table(k, j - k);
        std::int64_t pj = 2 * j;
        for (std::int64_t i = 0; i < j + k; ++i)
            r.check(Rat(tj[static_cast<std::size_t>(lnr(i, pj))], pj) +
                            Rat(tk[static_cast<std::size_t>(lnr(i, p))], p) ==
                        half,
                    loc("reciprocity", k, j, i));
    }

    return r;
}

Report carlitz_chunk(std::int64_t j, std::int64_t max) {
    Report r;
    for (std::int64_t k = 1; k <= max; ++k) {
        if (gcd64(j, k) != 1 || (((j ^ k) & 1) == 0)) continue;
        LaurentPoly rhs = geom_sum(j - k).mul_monomial(1, k); // (u^k - u^j)/(1-u)
        for (std::int64_t i = 0; i < j + k; ++i) {
            LaurentPoly lhs = q_poly(j, k, i).mul_monomial(1, j - 1) -
                              q_poly(k, j, i).mul_monomial(1, k - 1);
            r.check(lhs == rhs, loc("polynomial reciprocity", k, j, i));
        }
    }
    return r;
}

Report three_way_exact_chunk(std::int64_t k) {
    Report r;
    const std::int64_t p = 2 * k;
    for (std::int64_t q = 1; q < p; q += 2) {
        if (gcd64(q, p) != 1) continue;
        for (std::int64_t i = -4 * k; i < 4 * k; ++i) {
            // One residue walk feeds both formulas: s accumulates the
            // residues (the defining sum), t accumulates the signs
            // (-1)^floor((i+qj)/k), whose parity is [residue >= k].
            std::int64_t rr = lnr(i, p);
            std::int64_t s = 0, t = 0;
            for (std::int64_t j = 0; j < k; ++j) {
                s += rr;
                t += (rr < k) ? 1 : -1;
                rr += q;
                if (rr >= p) rr -= p;
            }
            r.check(k * t == k * (p - 1) - 2 * s, loc("g_def != g_sign", k, q, i));
        }
        // The public entry points on a spot-check subsample (the scan above
        // inlines the arithmetic for speed).
        const std::int64_t spots[] = {-p, -1, 0, 1, k, p - 1, 3 * k};
        for (std::int64_t i : spots)
            r.check(g_sign(k, q, i) == g_def(k, q, i), loc("g_sign api", k, q, i));
    }
    return r;
}

Report three_way_roots_chunk(std::int64_t k) {
    Report r;
    const std::int64_t p = 2 * k;
    std::vector<std::int64_t> sample = {-p,     -k,    -1,    0,  1,     2,
                                        3,      k - 1, k,     k + 1, p - 2, p - 1,
                                        p,      3 * k, 2 * p - 2, 2 * p - 1};
    std::sort(sample.begin(), sample.end());
    sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
    for (std::int64_t q = 1; q < p; q += 2) {
        if (gcd64(q, p) != 1) continue;
        for (std::int64_t i : sample) {
            try {
                double approx = g_roots(k, q, i);
                double exact = g_def(k, q, i).to_double();
                r.check(std::abs(approx - exact) <= 1e-9, loc("g_roots drift", k, q, i));
            } catch (const Error& ex) {
                r.fail(loc("g_roots threw", k, q, i) + ": " + ex.what());
            }
        }
    }
    return r;
}

static std::string bloc(const char* id, std::int64_t h, std::int64_t e, const char* label) {
    return std::string(id) + " at h=" + std::to_string(h) + " e=" + std::to_string(e) +
           " label=" + label;
}

Report tdbundle_chunk(std::int64_t h, std::int64_t max_e) {
    Report r;
    struct L {
        SpincQLabel v;
        const char* name;
        bool extendible;
    };
    const L labels[] = {{SpincQLabel::T0, "t0", false},
                        {SpincQLabel::T1, "t1", false},
                        {SpincQLabel::U0, "u0", true},
                        {SpincQLabel::U1, "u1", true}};
    for (std::int64_t e = -max_e; e <= max_e; ++e) {
        for (const L& l : labels) {
            Rat bot = q_bundle_d(h, e, l.v, Which::Bot);
            Rat top = q_bundle_d(h, e, l.v, Which::Top);

            Rat gapside = top - Rat(h - 1);
            r.check(bot >= gapside && congruent_mod2(bot, gapside),
                    bloc("top/bot gap", h, e, l.name));

            SpincQLabel dual = l.v;
            if (!l.extendible && h % 2 == 1)
                dual = (l.v == SpincQLabel::T0) ? SpincQLabel::T1 : SpincQLabel::T0;
            r.check(top == -q_bundle_d(h, -e, dual, Which::Bot),
                    bloc("duality", h, e, l.name));

            Rat step = l.extendible ? Rat(0) : Rat(1, 4);
            r.check(q_bundle_d(h, e + 1, l.v, Which::Bot) == bot + step,
                    bloc("linearity bot", h, e, l.name));
            r.check(q_bundle_d(h, e + 1, l.v, Which::Top) == top + step,
                    bloc("linearity top", h, e, l.name));
        }
    }
    return r;
}

Report congruence_chunk(std::int64_t k) {
    Report r;
    const std::int64_t p = 2 * k;
    for (std::int64_t q = 1; q < p; q += 2) {
        if (gcd64(q, p) != 1) continue;
        std::int64_t n = big_n(k, q);
        std::int64_t kc = k_c_lens(k, q);
        r.check(fmod_pos(n - kc, 2) == 0, loc("N parity != self-linking parity", k, q));
        for (std::int64_t h = 1; h <= 4; ++h)
            r.check(euler_congruence(kc, h) == fmod_pos(2 * h - 2 * n, 4),
                    loc("mod-4 congruences disagree", k, q) + " h=" + std::to_string(h));
    }
    return r;
}

Report mbound_lens_chunk(std::int64_t k, std::int64_t hmax, std::int64_t emax) {
    Report r;
    const std::int64_t p = 2 * k;
    for (std::int64_t q = 1; q < p; q += 2) {
        if (gcd64(q, p) != 1) continue;
        Rat delta = delta_lens(k, q);
        for (std::int64_t h = 1; h <= hmax; ++h)
            for (std::int64_t e = -emax; e <= emax; ++e) {
                bool lens = lens_feasible(k, q, h, e).feasible;
                bool mb = mbound_check(delta, h, e, PhiRestriction::Unknown).feasible;
                r.check(lens == mb, loc("mbound != lens verdict", k, q) +
                                        " h=" + std::to_string(h) +
                                        " e=" + std::to_string(e));
            }
    }
    return r;
}

Report spin_implication_all() {
    Report r;
    for (std::int64_t bp = 0; bp <= 6; ++bp)
        for (std::int64_t bm = 0; bm <= 6; ++bm) {
            std::int64_t sigma = bp - bm;
            if (sigma < 0) continue;
            for (std::int64_t h = 1; h <= 6; ++h)
                for (std::int64_t e = -60; e <= 60; ++e) {
                    bool strong = spin_check(sigma, bp, bm, h, e).feasible;
                    if (!strong) {
                        r.pass();
                        continue;
                    }
                    r.check(spin_cor(sigma, bp, bm, h, e).feasible,
                            "spin_check feasible but spin_cor infeasible at b+=" +
                                std::to_string(bp) + " b-=" + std::to_string(bm) +
                                " h=" + std::to_string(h) + " e=" + std::to_string(e));
                }
        }
    return r;
}

Report run_two_g(std::int64_t max_p, std::int64_t brute_max, int workers) {
    return run_chunked(max_p / 2, workers, [=](std::int64_t i) {
        return two_g_chunk(i + 1, brute_max);
    });
}

Report run_identities(std::int64_t max, int workers) {
    return run_chunked(max, workers,
                       [=](std::int64_t i) { return identities_chunk(i + 1, max); });
}

Report run_carlitz(std::int64_t max, int workers) {
    return run_chunked(max, workers,
                       [=](std::int64_t i) { return carlitz_chunk(i + 1, max); });
}

Report run_three_way_exact(std::int64_t max_k, int workers) {
    return run_chunked(max_k, workers,
                       [](std::int64_t i) { return three_way_exact_chunk(i + 1); });
}

Report run_three_way_roots(std::int64_t max_k, int workers) {
    return run_chunked(max_k, workers,
                       [](std::int64_t i) { return three_way_roots_chunk(i + 1); });
}

Report run_tdbundle(std::int64_t max_h, std::int64_t max_e, int workers) {
    return run_chunked(max_h, workers,
                       [=](std::int64_t i) { return tdbundle_chunk(i + 1, max_e); });
}

Report run_congruence(std::int64_t max_p, int workers) {
    return run_chunked(max_p / 2, workers,
                       [](std::int64_t i) { return congruence_chunk(i + 1); });
}

Report run_mbound_lens(std::int64_t max_p, std::int64_t hmax, std::int64_t emax, int workers) {
    return run_chunked(max_p / 2, workers, [=](std::int64_t i) {
        return mbound_lens_chunk(i + 1, hmax, emax);
    });
}

} // namespace gg::verify
