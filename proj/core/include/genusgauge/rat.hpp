#pragma once

#include <cstdint>
#include <string>

#include "genusgauge/checked.hpp"
#include "genusgauge/errors.hpp"
#include "genusgauge/intfun.hpp"

namespace gg {

// Exact rational number. Always normalized at construction: gcd(num, den) = 1,
// den > 0, zero canonically 0/1. Equality is therefore structural.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(std::int64_t n) : num_(n), den_(1) {} // NOLINT: implicit by design
    Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    // Membership in (1/2)Z.
    bool is_half_integral() const { return den_ == 1 || den_ == 2; }

    // Largest integer <= value.
    std::int64_t floor() const { return floor_div(num_, den_); }

    Rat operator-() const { return Rat(neg_ck(num_), den_, already_normal{}); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        // a/b + c/d with the classic gcd trick to keep intermediates small.
        std::int64_t g = gcd64(a.den_, b.den_);
        std::int64_t bd = a.den_ / g;
        std::int64_t n = add_ck(mul_ck(a.num_, b.den_ / g), mul_ck(b.num_, bd));
        return Rat(n, mul_ck(bd, b.den_));
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        std::int64_t g1 = gcd64(a.num_, b.den_);
        std::int64_t g2 = gcd64(b.num_, a.den_);
        return Rat(mul_ck(a.num_ / g1, b.num_ / g2),
                   mul_ck(a.den_ / g2, b.den_ / g1), already_normal{});
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw ParamError("Rat: division by zero");
        return a * Rat(b.den_, b.num_);
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return mul_ck(a.num_, b.den_) < mul_ck(b.num_, a.den_);
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    // a ~ b when a - b is an even integer (grading congruence mod 2).
    friend bool congruent_mod2(const Rat& a, const Rat& b) {
        Rat d = a - b;
        return d.den_ == 1 && (d.num_ % 2) == 0;
    }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    // "a/b", or just "a" for integers.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) {
            s += '/';
            s += std::to_string(den_);
        }
        return s;
    }

    // Parses "a" or "a/b" (optional leading '-').
    static Rat parse(const std::string& s) {
        if (s.empty()) throw ParamError("Rat: empty string");
        std::size_t slash = s.find('/');
        try {
            std::size_t used = 0;
            if (slash == std::string::npos) {
                std::int64_t n = std::stoll(s, &used);
                if (used != s.size()) throw ParamError("Rat: trailing characters in '" + s + "'");
                return Rat(n);
            }
            std::int64_t n = std::stoll(s.substr(0, slash), &used);
            if (used != slash) throw ParamError("Rat: bad numerator in '" + s + "'");
            std::string dpart = s.substr(slash + 1);
            std::int64_t d = std::stoll(dpart, &used);
            if (used != dpart.size()) throw ParamError("Rat: bad denominator in '" + s + "'");
            return Rat(n, d);
        } catch (const std::invalid_argument&) {
            throw ParamError("Rat: cannot parse '" + s + "'");
        } catch (const std::out_of_range&) {
            throw OverflowError("Rat: literal out of range: '" + s + "'");
        }
    }

private:
    struct already_normal {};
    Rat(std::int64_t n, std::int64_t d, already_normal) : num_(n), den_(d) {}

    void normalize() {
        if (den_ == 0) throw ParamError("Rat: zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = neg_ck(num_);
            den_ = neg_ck(den_);
        }
        std::int64_t g = gcd64(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace gg
