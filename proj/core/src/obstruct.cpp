#include "genusgauge/obstruct.hpp"

#include <algorithm>

#include "genusgauge/checked.hpp"
#include "genusgauge/dedekind.hpp"
#include "genusgauge/errors.hpp"
#include "genusgauge/intfun.hpp"

namespace gg {

static void require_genus(std::int64_t h) {
    if (h < 1) throw ParamError("genus h must be positive");
}

static void require_even_e(std::int64_t e) {
    if (e & 1) throw ParamError("e must be even here (spin normal-bundle hypothesis)");
}

static bool divides4(std::int64_t x) { return fmod_pos(x, 4) == 0; }

Verdict mbound_check(const Rat& delta, std::int64_t h, std::int64_t e, PhiRestriction phi) {
    require_genus(h);
    if (!delta.is_half_integral())
        throw ParamError("mbound_check: delta must be an integer or half-integer");
    Verdict v;

    bool refined = (phi == PhiRestriction::Nontrivial && h % 2 == 0) ||
                   (phi == PhiRestriction::Trivial && h % 2 == 1);
    Rat two_delta = Rat(2) * delta;
    if (refined) {
        if (!(Rat(h) >= two_delta + Rat(1))) v.violated.push_back("h >= 2*delta + 1");
    } else {
        if (!(Rat(h) >= two_delta)) v.violated.push_back("h >= 2*delta");
    }

    // 4*delta is an even integer for half-integral delta.
    Rat four_delta = Rat(4) * delta;
    std::int64_t t = sub_ck(mul_ck(2, h), four_delta.num());
    std::int64_t abs_e = e < 0 ? neg_ck(e) : e;
    if (!(abs_e <= t)) v.violated.push_back("|e| <= 2h - 4*delta");
    if (!divides4(sub_ck(e, t))) v.violated.push_back("e == 2h - 4*delta mod 4");

    v.feasible = v.violated.empty();
    return v;
}

Verdict lens_feasible(std::int64_t k, std::int64_t q, std::int64_t h, std::int64_t e) {
    require_genus(h);
    std::int64_t n = big_n(k, q);
    Verdict v;
    v.exact = true;
    if (!(h >= n)) v.violated.push_back("h >= N");
    std::int64_t t = mul_ck(2, sub_ck(h, n));
    std::int64_t abs_e = e < 0 ? neg_ck(e) : e;
    if (!(abs_e <= t)) v.violated.push_back("|e| <= 2(h-N)");
    if (!divides4(sub_ck(e, t))) v.violated.push_back("e == 2(h-N) mod 4");
    v.feasible = v.violated.empty();
    if (v.feasible) {
        std::int64_t l = h - n;
        std::int64_t plus = (mul_ck(2, l) + e) / 4;
        std::int64_t minus = (mul_ck(2, l) - e) / 4;
        // Guaranteed by the range and congruence conditions.
        if (plus < 0 || minus < 0 || plus + minus != l)
            throw Error("lens_feasible: internal certificate bookkeeping failed");
        v.certificate = {{"base_genus", std::to_string(n)},
                         {"rp2_plus", std::to_string(plus)},
                         {"rp2_minus", std::to_string(minus)}};
    }
    return v;
}

std::int64_t euler_congruence(std::int64_t k_c, std::int64_t h) {
    if (k_c != 0 && k_c != 1) throw ParamError("euler_congruence: k_c must be 0 or 1");
    require_genus(h);
    return 2 * ((k_c + fmod_pos(h, 2)) % 2);
}

std::int64_t k_c_lens(std::int64_t k, std::int64_t q) {
    check_gparams(k, q);
    // 2*lk(c,c) = -qbar * k mod 2 under lk(x,y) = -qbar*x*y/(2k); qbar is odd,
    // so the sign and the unit drop and only k's parity survives.
    std::int64_t p = mul_ck(2, k);
    std::int64_t qbar = modinv(lnr(q, p), p);
    return ((qbar % 2) * (k % 2)) % 2;
}

bool twist_bound_holds(const Rat& d0, const Rat& d1_twisted, std::int64_t h,
                       std::int64_t e, SpincQLabel label) {
    require_genus(h);
    if (label != SpincQLabel::T0 && label != SpincQLabel::T1)
        throw ParamError("twist_bound_holds: only the non-extendible labels t0/t1 apply");
    Rat halfgap(h - 1, 2);
    Rat lower = q_bundle_d(h, e, label, Which::Top) - halfgap;
    Rat upper = q_bundle_d(h, e, label, Which::Bot) + halfgap;
    Rat middle = d1_twisted - d0;
    return lower <= middle && middle <= upper && congruent_mod2(lower, middle) &&
           congruent_mod2(middle, upper) && congruent_mod2(lower, upper);
}

namespace {
// Mixed-radix index arithmetic for DTable groups.
struct IndexGroup {
    std::vector<std::int64_t> orders;
    std::int64_t n = 1;

    explicit IndexGroup(const DTable& t) : orders(t.orders) {
        if (orders.empty()) throw ParamError("rp2_test: table group must be nontrivial");
        for (std::int64_t o : orders) {
            if (o < 2) throw ParamError("rp2_test: each cyclic order must be >= 2");
            n = mul_ck(n, o);
        }
        if (n & 1) throw ParamError("rp2_test: group order must be even");
        if (static_cast<std::int64_t>(t.values.size()) != n)
            throw ParamError("rp2_test: value count does not match group order");
    }

    std::int64_t add(std::int64_t a, std::int64_t b) const {
        std::int64_t r = 0, stride = 1;
        for (std::int64_t o : orders) {
            std::int64_t da = (a / stride) % o;
            std::int64_t db = (b / stride) % o;
            r += ((da + db) % o) * stride;
            stride *= o;
        }
        return r;
    }

    std::int64_t dbl(std::int64_t a) const { return add(a, a); }
};
} // namespace

bool rp2_test(const DTable& table, std::int64_t phi_shift,
              const std::vector<std::int64_t>* subgroup) {
    IndexGroup g(table);
    if (phi_shift < 0 || phi_shift >= g.n)
        throw ParamError("rp2_test: phi_shift out of range");
    if (phi_shift == 0 || g.dbl(phi_shift) != 0)
        throw ParamError("rp2_test: phi_shift must have order 2");

    std::vector<std::int64_t> k;
    if (subgroup) {
        k = *subgroup;
        for (std::int64_t x : k)
            if (x < 0 || x >= g.n) throw ParamError("rp2_test: subgroup element out of range");
        std::sort(k.begin(), k.end());
        k.erase(std::unique(k.begin(), k.end()), k.end());
        if (k.empty() || k.front() != 0)
            throw ParamError("rp2_test: subgroup must contain 0");
        for (std::int64_t x : k)
            for (std::int64_t y : k)
                if (!std::binary_search(k.begin(), k.end(), g.add(x, y)))
                    throw ParamError("rp2_test: subgroup is not closed under addition");
    } else {
        for (std::int64_t x = 0; x < g.n; ++x) k.push_back(g.dbl(x));
        std::sort(k.begin(), k.end());
        k.erase(std::unique(k.begin(), k.end()), k.end());
    }

    const Rat half(1, 2);
    for (std::int64_t s0 = 0; s0 < g.n; ++s0) {
        bool ok = true;
        for (std::int64_t t : k) {
            std::int64_t s = g.add(s0, t);
            if (table.values[static_cast<std::size_t>(g.add(s, phi_shift))] -
                    table.values[static_cast<std::size_t>(s)] !=
                half) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

Rat theta_lens(std::int64_t k, std::int64_t q) {
    return Rat(sub_ck(big_n(k, q), 2), 2);
}

Rat rho_q_bundle(std::int64_t h, std::int64_t e) {
    require_genus(h);
    require_even_e(e);
    return Rat(neg_ck(e), 2);
}

bool gsign_check(const RhoInput& rho, std::int64_t h, std::int64_t e) {
    require_genus(h);
    require_even_e(e);
    if (rho.kpow < 0) throw ParamError("gsign_check: kpow must be nonnegative");
    Rat bound(rho.kpow >= 1 ? mul_ck(pow_ck(2, rho.kpow), h) : mul_ck(2, h));
    Rat x = (rho.rho_alphatau - rho.rho_alpha) + Rat(e, 2);
    return -bound <= x && x <= bound;
}

Verdict rho_bound(const Rat& rho_tau_abs, std::int64_t h, std::int64_t e) {
    require_genus(h);
    require_even_e(e);
    if (rho_tau_abs < Rat(0)) throw ParamError("rho_bound: |rho| must be nonnegative");
    Verdict v;
    if (!(Rat(h) >= rho_tau_abs / Rat(2))) v.violated.push_back("h >= |rho|/2");
    std::int64_t abs_e = e < 0 ? neg_ck(e) : e;
    if (!(Rat(abs_e) <= Rat(2) * (Rat(mul_ck(2, h)) - rho_tau_abs)))
        v.violated.push_back("|e| <= 2(2h - |rho|)");
    v.feasible = v.violated.empty();
    return v;
}

Verdict definite_check(std::int64_t b, std::int64_t l, std::int64_t h, std::int64_t e) {
    require_genus(h);
    if (b < 0) throw ParamError("definite_check: b must be nonnegative");
    if (l < 0 || l > b) throw ParamError("definite_check: need 0 <= l <= b");
    Verdict v;
    std::int64_t lo = sub_ck(l, mul_ck(2, h));
    if (!divides4(sub_ck(e, lo))) v.violated.push_back("e == l - 2h mod 4");
    if (!(e >= lo)) v.violated.push_back("e >= l - 2h");
    // The upper bound needs the surface class to span the whole definite
    // lattice; with b = 0 there is no lattice and no upper bound.
    if (l == b && b >= 1) {
        std::int64_t hi = sub_ck(add_ck(mul_ck(9, b), mul_ck(10, h)), 16);
        if (!(e <= hi)) v.violated.push_back("e <= 9b + 10h - 16");
    }
    v.feasible = v.violated.empty();
    return v;
}

static void check_spin_params(std::int64_t sigma, std::int64_t bplus, std::int64_t bminus,
                              std::int64_t h) {
    require_genus(h);
    if (bplus < 0 || bminus < 0) throw ParamError("spin: b+ and b- must be nonnegative");
    if (sigma < 0)
        throw OrientationError("spin: sigma must be >= 0; reverse the ambient orientation");
    if (sigma != sub_ck(bplus, bminus))
        throw ParamError("spin: sigma must equal b+ - b-");
}

Verdict spin_check(std::int64_t sigma, std::int64_t bplus, std::int64_t bminus,
                   std::int64_t h, std::int64_t e) {
    check_spin_params(sigma, bplus, bminus, h);
    Verdict v;
    for (std::int64_t k = 0; k <= h; ++k) {
        std::int64_t ep = sub_ck(add_ck(e, mul_ck(2, h)), mul_ck(4, k));
        if (fmod_pos(sub_ck(ep, sigma), 16) != 0) continue;
        if (!(ep <= add_ck(sigma, mul_ck(8, sub_ck(add_ck(bplus, h), 2))))) continue;
        if (ep < 0 && !(ep >= sub_ck(sigma, mul_ck(8, sub_ck(add_ck(bminus, h), 2))))) continue;
        if (ep == 0 && !(0 >= sub_ck(sigma, mul_ck(8, sub_ck(add_ck(bminus, h), 1))))) continue;
        std::int64_t abs_ep = ep < 0 ? -ep : ep;
        v.feasible = true;
        v.certificate = {{"k", std::to_string(k)},
                         {"sigma_Z", std::to_string(-ep)},
                         {"b2_Z", std::to_string(ep == 0 ? h + 1 : h - 1 + abs_ep)}};
        return v;
    }
    v.violated.push_back("no admissible k in [0, h]");
    return v;
}

Verdict spin_cor(std::int64_t sigma, std::int64_t bplus, std::int64_t bminus,
                 std::int64_t h, std::int64_t e) {
    check_spin_params(sigma, bplus, bminus, h);
    Verdict v;
    std::int64_t twoh = mul_ck(2, h);
    if (!divides4(sub_ck(e, add_ck(sigma, twoh)))) v.violated.push_back("e == sigma + 2h mod 4");
    std::int64_t lo = std::min(neg_ck(twoh),
                               sub_ck(sub_ck(sigma, mul_ck(8, sub_ck(bminus, 2))), mul_ck(10, h)));
    if (!(e >= lo)) v.violated.push_back("e >= min(-2h, sigma - 8(b- - 2) - 10h)");
    std::int64_t hi = std::max(twoh,
                               add_ck(add_ck(sigma, mul_ck(8, sub_ck(bplus, 2))), mul_ck(10, h)));
    if (!(e <= hi)) v.violated.push_back("e <= max(2h, sigma + 8(b+ - 2) + 10h)");
    v.feasible = v.violated.empty();
    return v;
}

Verdict sphere_feasible(std::int64_t h, std::int64_t e) {
    require_genus(h);
    Verdict v;
    std::int64_t twoh = mul_ck(2, h);
    std::int64_t abs_e = e < 0 ? neg_ck(e) : e;
    if (!(abs_e <= twoh)) v.violated.push_back("|e| <= 2h");
    if (!divides4(sub_ck(e, twoh))) v.violated.push_back("e == 2h mod 4");
    v.feasible = v.violated.empty();
    return v;
}

} // namespace gg
