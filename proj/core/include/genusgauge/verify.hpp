#pragma once

#include <cstdint>
#include <string>

namespace gg::verify {

// Outcome of a grid verification. Chunks are merged in chunk order, so
// checked/failed counts and the first failure are independent of how many
// workers ran the grid.
struct Report {
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    std::string first_failure;

    void pass() { ++checked; }

    void fail(const std::string& what) {
        ++checked;
        ++failed;
        if (first_failure.empty()) first_failure = what;
    }

    void check(bool ok, const std::string& what) {
        if (ok)
            pass();
        else
            fail(what);
    }

    void merge(const Report& later) {
        checked += later.checked;
        failed += later.failed;
        if (first_failure.empty()) first_failure = later.first_failure;
    }

    bool ok() const { return failed == 0; }
};

// --- Single chunks (one outermost parameter value each) ---

// 2*G(2k,q) = N(2k,q) for every q coprime to 2k, plus N = k (mod 2); when
// 2k <= brute_max, G is re-verified against the brute-force maximum.
Report two_g_chunk(std::int64_t k, std::int64_t brute_max);

// The g-function and Laurent identities with first parameter k, inner
// parameters bounded by max: negation, step, antisymmetry, palindrome,
// maximizer location, the two genus recursions, reciprocity, the polynomial
// recursion, and polynomial reversal.
Report identities_chunk(std::int64_t k, std::int64_t max);

// The Carlitz-type polynomial reciprocity at first parameter j, second
// parameter up to max.
Report carlitz_chunk(std::int64_t j, std::int64_t max);

// g_def == g_sign exactly for all coprime q and i in [-4k, 4k).
Report three_way_exact_chunk(std::int64_t k);

// g_roots agrees with g_def within 1e-9 on a fixed 16-point i-sample per q.
Report three_way_roots_chunk(std::int64_t k);

// Circle-bundle correction terms at genus h for |e| <= max_e, all four
// labels: top/bot gap with mod-2 congruence, orientation-reversal duality,
// linearity in e.
Report tdbundle_chunk(std::int64_t h, std::int64_t max_e);

// N(2k,q) parity matches the self-linking parity, and the two mod-4 Euler
// congruences coincide, for every q coprime to 2k.
Report congruence_chunk(std::int64_t k);

// mbound_check (with delta = Delta(L(2k,q))) agrees with lens_feasible for
// h <= hmax, |e| <= emax, every coprime q.
Report mbound_lens_chunk(std::int64_t k, std::int64_t hmax, std::int64_t emax);

// spin_check feasible implies spin_cor feasible on the fixed grid
// b+, b- in [0,6], sigma = b+ - b- >= 0, h in [1,6], |e| <= 60.
Report spin_implication_all();

// --- Whole families, parallel over chunks (workers <= 0 picks a default) ---

Report run_two_g(std::int64_t max_p, std::int64_t brute_max, int workers);
Report run_identities(std::int64_t max, int workers);
Report run_carlitz(std::int64_t max, int workers);
Report run_three_way_exact(std::int64_t max_k, int workers);
Report run_three_way_roots(std::int64_t max_k, int workers);
Report run_tdbundle(std::int64_t max_h, std::int64_t max_e, int workers);
Report run_congruence(std::int64_t max_p, int workers);
Report run_mbound_lens(std::int64_t max_p, std::int64_t hmax, std::int64_t emax, int workers);

} // namespace gg::verify
