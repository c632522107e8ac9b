#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <utility>
#include <vector>

#include "genusgauge/dedekind.hpp"
#include "genusgauge/errors.hpp"
#include "genusgauge/intfun.hpp"
#include "genusgauge/laurent.hpp"
#include "genusgauge/rat.hpp"

#include "oracle/dedekind_oracle.inc"

using gg::LaurentPoly;
using gg::Rat;

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(gg::g_def(0, 1, 0), gg::ParamError);
    CHECK_THROWS_AS(gg::g_def(2, 2, 0), gg::ParamError);  // even q
    CHECK_THROWS_AS(gg::g_def(3, 3, 0), gg::ParamError);  // gcd(3,6) = 3
    CHECK_THROWS_AS(gg::g_sign(2, -2, 0), gg::ParamError);
    CHECK_THROWS_AS(gg::big_g(0, 1), gg::ParamError);
    CHECK_THROWS_AS(gg::big_n(2, 2), gg::ParamError);
    CHECK_THROWS_AS(gg::big_i(2, -1), gg::ParamError); // maximizer recursion needs q > 0
    CHECK_THROWS_AS(gg::p_poly(0, 1, 0), gg::ParamError);
    CHECK_THROWS_AS(gg::p_poly(2, 4, 0), gg::ParamError); // even q
    CHECK_THROWS_AS(gg::q_poly(2, 4, 0), gg::ParamError); // same parity
    CHECK_THROWS_AS(gg::q_poly(2, 0, 0), gg::ParamError);
    CHECK_THROWS_AS(gg::q_poly(3, 6, 0), gg::ParamError); // not coprime
}

TEST_CASE("point values") {
    CHECK(gg::g_def(1, 1, 0) == Rat(1, 2));
    CHECK(gg::g_def(2, 1, 0) == Rat(1));
    CHECK(gg::g_def(6, 5, 1) == Rat(0));
    CHECK(gg::g_sign(2, 1, 0) == Rat(1));
    CHECK(gg::g_sign(2, 1, 2) == Rat(-1));
    CHECK(gg::g_sign(1, 1, 0) == Rat(1, 2));
    CHECK(gg::big_g(1, 1) == Rat(1, 2));
    CHECK(gg::big_g(2, 1) == Rat(1));
    CHECK(gg::big_g(6, 5) == Rat(1));
    CHECK(gg::big_n(1, 1) == 1);
    CHECK(gg::big_n(2, 1) == 2);
    CHECK(gg::big_n(6, 5) == 2);
    CHECK(gg::big_i(1, 1) == 0);
    CHECK(gg::big_i(2, 3) == 1);
    CHECK(gg::big_i(6, 5) == 0);
}

TEST_CASE("defining sum matches the brute-force oracle") {
    for (const GRow& r : kGOracle) {
        Rat want(r.num, r.den);
        CHECK(gg::g_def(r.k, r.q, r.i) == want);
        CHECK(gg::g_sign(r.k, r.q, r.i) == want);
    }
}

TEST_CASE("maximum, count, and maximizer match the brute-force oracle") {
    for (const GNIRow& r : kGNIOracle) {
        Rat want(r.gnum, r.gden);
        CHECK(gg::big_g(r.k, r.q) == want);
        CHECK(gg::big_g_brute(r.k, r.q) == want);
        CHECK(gg::big_n(r.k, r.q) == r.n);
        CHECK(gg::big_i(r.k, r.q) == r.i);
        CHECK(gg::g_def(r.k, r.q, r.i) == want); // the maximizer attains the maximum
    }
}

TEST_CASE("q normalization metadata") {
    gg::QNorm norm;
    CHECK(gg::big_g(6, 5, &norm) == Rat(1));
    CHECK(norm.q_input == 5);
    CHECK(norm.q_reduced == 5);
    CHECK(norm.q_star == 5);
    CHECK(!norm.folded);

    CHECK(gg::big_g(6, -5, &norm) == Rat(1));
    CHECK(norm.q_input == -5);
    CHECK(norm.q_reduced == 7);
    CHECK(norm.q_star == 5);
    CHECK(norm.folded);

    gg::QNorm direct = gg::normalize_q(6, 19);
    CHECK(direct.q_reduced == 7);
    CHECK(direct.q_star == 5);
    CHECK(direct.folded);
}

TEST_CASE("negative and out-of-period q reduce consistently") {
    for (std::int64_t k = 1; k <= 10; ++k) {
        std::int64_t p = 2 * k;
        for (std::int64_t q = 1; q < p; q += 2) {
            if (gg::gcd64(q, p) != 1) continue;
            CHECK(gg::big_g(k, q) == gg::big_g(k, q - p));
            CHECK(gg::big_g(k, q) == gg::big_g(k, q + p));
            CHECK(gg::big_n(k, q) == gg::big_n(k, p - q));
            for (std::int64_t i = -2; i <= 2; ++i)
                CHECK(gg::g_def(k, q, i) == gg::g_def(k, q + p, i));
        }
    }
}

TEST_CASE("scaled tables agree with the pointwise values") {
    for (std::int64_t k = 1; k <= 24; ++k) {
        std::int64_t p = 2 * k;
        for (std::int64_t q = 1; q < p; q += 2) {
            if (gg::gcd64(q, p) != 1) continue;
            std::vector<std::int64_t> table = gg::g_scaled_table(k, q);
            REQUIRE(table.size() == static_cast<std::size_t>(p));
            for (std::int64_t i = 0; i < p; ++i)
                CHECK(Rat(table[static_cast<std::size_t>(i)], p) == gg::g_def(k, q, i));
        }
    }
}

TEST_CASE("value polynomial matches the oracle") {
    for (const PolyRow& r : kPOracle)
        CHECK(gg::p_poly(r.k, r.q, r.i) == LaurentPoly::from_sorted(r.terms));
}

TEST_CASE("reciprocity polynomial matches the oracle") {
    for (const PolyRow& r : kQOracle)
        CHECK(gg::q_poly(r.k, r.q, r.i) == LaurentPoly::from_sorted(r.terms));
}

TEST_CASE("polynomial specializations recover the sums") {
    for (std::int64_t k = 1; k <= 24; ++k) {
        std::int64_t p = 2 * k;
        for (std::int64_t q = 1; q < p; q += 2) {
            if (gg::gcd64(q, p) != 1) continue;
            for (std::int64_t i = -p; i < p; ++i) {
                LaurentPoly pp = gg::p_poly(k, q, i);
                CHECK(pp.coeff_sum() == k);
                CHECK(Rat(pp.eval_sign()) == Rat(2) * gg::g_sign(k, q, i));
            }
        }
    }
}

TEST_CASE("the two polynomial families coincide where both are defined") {
    for (std::int64_t a = 1; a <= 10; ++a)
        for (std::int64_t b = 1; b <= 10; ++b) {
            if (gg::gcd64(a, b) != 1 || ((a ^ b) & 1) == 0) continue;
            for (std::int64_t i = -a - b; i < a + b; ++i)
                CHECK(gg::q_poly(a, b, i) == gg::p_poly(a, b - a, i));
        }
}

TEST_CASE("root-of-unity evaluation agrees with the exact value") {
    CHECK(std::abs(gg::g_roots(1, 1, 0) - 0.5) <= 1e-9);
    CHECK(std::abs(gg::g_roots(2, 1, 0) - 1.0) <= 1e-9);
    CHECK(std::abs(gg::g_roots(6, 5, 0) - 1.0) <= 1e-9);
    for (std::int64_t k = 1; k <= 30; ++k) {
        std::int64_t p = 2 * k;
        for (std::int64_t q = 1; q < p; q += 2) {
            if (gg::gcd64(q, p) != 1) continue;
            for (std::int64_t i : {-p, std::int64_t{0}, k, p - 1})
                CHECK(std::abs(gg::g_roots(k, q, i) -
                               gg::g_def(k, q, i).to_double()) <= 1e-9);
        }
    }
}

TEST_CASE("root-of-unity evaluation respects the size cap") {
    CHECK(gg::g_roots_cap() == 500); // default without the environment override
    CHECK_THROWS_AS(gg::g_roots(501, 1, 0), gg::CapError);

    setenv("GENUSGAUGE_MAX_K", "10", 1);
    CHECK(gg::g_roots_cap() == 10);
    CHECK_THROWS_AS(gg::g_roots(11, 1, 0), gg::CapError);
    CHECK(std::abs(gg::g_roots(10, 1, 0) - gg::g_def(10, 1, 0).to_double()) <= 1e-9);

    setenv("GENUSGAUGE_MAX_K", "garbage", 1);
    CHECK_THROWS_AS(gg::g_roots_cap(), gg::ParamError); // unparsable values are rejected
    setenv("GENUSGAUGE_MAX_K", "0", 1);
    CHECK_THROWS_AS(gg::g_roots_cap(), gg::ParamError);

    unsetenv("GENUSGAUGE_MAX_K");
    CHECK(gg::g_roots_cap() == 500);
}
