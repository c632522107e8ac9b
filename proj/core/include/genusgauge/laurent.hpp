#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "genusgauge/checked.hpp"
#include "genusgauge/errors.hpp"
#include "genusgauge/rat.hpp"

namespace gg {

// Integer-coefficient Laurent polynomial in one variable u, stored as a map
// exponent -> nonzero coefficient (flat sorted vector as the map container).
// Canonical form: strictly increasing exponents, no zero coefficients; two
// polynomials are equal iff the maps are equal.
class LaurentPoly {
public:
    using Term = std::pair<std::int64_t, std::int64_t>; // (exponent, coefficient)

    LaurentPoly() = default;

    static LaurentPoly monomial(std::int64_t coeff, std::int64_t exp) {
        LaurentPoly p;
        if (coeff != 0) p.terms_.push_back({exp, coeff});
        return p;
    }

    // Terms must arrive sorted by strictly increasing exponent; zero
    // coefficients are dropped. Internal fast path for the builders.
    static LaurentPoly from_sorted(std::vector<Term> terms) {
        LaurentPoly p;
        p.terms_.reserve(terms.size());
        for (const Term& t : terms) {
            if (t.second == 0) continue;
            if (!p.terms_.empty() && p.terms_.back().first >= t.first)
                throw ParamError("LaurentPoly: terms not strictly sorted");
            p.terms_.push_back(t);
        }
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    std::int64_t coeff(std::int64_t exp) const {
        for (const Term& t : terms_)
            if (t.first == exp) return t.second;
        return 0;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly negate() const {
        LaurentPoly r;
        r.terms_.reserve(terms_.size());
        for (const Term& t : terms_) r.terms_.push_back({t.first, neg_ck(t.second)});
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            const Term& x = a.terms_[i];
            const Term& y = b.terms_[j];
            if (x.first < y.first) {
                r.terms_.push_back(x);
                ++i;
            } else if (y.first < x.first) {
                r.terms_.push_back(y);
                ++j;
            } else {
                std::int64_t c = add_ck(x.second, y.second);
                if (c != 0) r.terms_.push_back({x.first, c});
                ++i;
                ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        return a + b.negate();
    }

    // Multiply by the monomial c*u^m.
    LaurentPoly mul_monomial(std::int64_t c, std::int64_t m) const {
        LaurentPoly r;
        if (c == 0) return r;
        r.terms_.reserve(terms_.size());
        for (const Term& t : terms_)
            r.terms_.push_back({add_ck(t.first, m), mul_ck(t.second, c)});
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const Term& t : a.terms_) r = r + b.mul_monomial(t.second, t.first);
        return r;
    }

    // Exact evaluation at an integer point. Negative exponents make the value
    // rational; x = 0 with negative exponents present is a pole.
    Rat eval_int(std::int64_t x) const {
        if (x == 0) {
            for (const Term& t : terms_)
                if (t.first < 0) throw PoleError("LaurentPoly: evaluation at 0 with negative exponents");
            return Rat(coeff(0));
        }
        Rat acc(0);
        for (const Term& t : terms_) {
            std::int64_t p = pow_ck(x, t.first < 0 ? neg_ck(t.first) : t.first);
            Rat term = t.first < 0 ? Rat(t.second, p) : Rat(mul_ck(t.second, p));
            acc += term;
        }
        return acc;
    }

    // Value at u = -1: the alternating coefficient sum, always an integer.
    std::int64_t eval_sign() const {
        std::int64_t acc = 0;
        for (const Term& t : terms_)
            acc = add_ck(acc, (t.first & 1) ? neg_ck(t.second) : t.second);
        return acc;
    }

    // Sum of coefficients (value at u = 1).
    std::int64_t coeff_sum() const {
        std::int64_t acc = 0;
        for (const Term& t : terms_) acc = add_ck(acc, t.second);
        return acc;
    }

    // Ascending monomial list: "1 + u", "-u^-1", "2 + 3*u^2", "0" when empty.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const Term& t : terms_) {
            std::int64_t c = t.second;
            if (first) {
                if (c < 0) s += "-";
            } else {
                s += (c < 0) ? " - " : " + ";
            }
            unsigned long long a = c < 0 ? 0ULL - static_cast<unsigned long long>(c)
                                         : static_cast<unsigned long long>(c);
            if (t.first == 0) {
                s += std::to_string(a);
            } else {
                if (a != 1) {
                    s += std::to_string(a);
                    s += "*";
                }
                s += "u";
                if (t.first != 1) {
                    s += "^";
                    s += std::to_string(t.first);
                }
            }
            first = false;
        }
        return s;
    }

private:
    std::vector<Term> terms_;
};

// The polynomial with (1 - u) * geom_sum(q) = 1 - u^q, q != 0:
// q > 0: 1 + u + ... + u^(q-1); q < 0: -(u^q + ... + u^-1).
inline LaurentPoly geom_sum(std::int64_t q) {
    if (q == 0) throw ParamError("geom_sum: q must be nonzero");
    std::vector<LaurentPoly::Term> terms;
    if (q > 0) {
        terms.reserve(static_cast<std::size_t>(q));
        for (std::int64_t t = 0; t < q; ++t) terms.push_back({t, 1});
    } else {
        terms.reserve(static_cast<std::size_t>(-q));
        for (std::int64_t t = q; t <= -1; ++t) terms.push_back({t, -1});
    }
    return LaurentPoly::from_sorted(std::move(terms));
}

} // namespace gg
