#include <benchmark/benchmark.h>

#include <cstdint>

#include "genusgauge/dedekind.hpp"
#include "genusgauge/intfun.hpp"
#include "genusgauge/laurent.hpp"
#include "genusgauge/rat.hpp"
#include "genusgauge/verify.hpp"

namespace {

// Largest odd q coprime to 2k below the period, so the maximizer scan sees
// the worst fold.
std::int64_t worst_q(std::int64_t k) {
    std::int64_t p = 2 * k;
    for (std::int64_t q = p - 1;; q -= 2)
        if (gg::gcd64(q, p) == 1) return q;
}

void BM_GDef(benchmark::State& state) {
    std::int64_t k = state.range(0);
    std::int64_t q = worst_q(k);
    for (auto _ : state) {
        gg::Rat v = gg::g_def(k, q, k / 2);
        benchmark::DoNotOptimize(v);
    }
    state.SetComplexityN(k);
}
BENCHMARK(BM_GDef)->Arg(100)->Arg(1000)->Arg(10000)->Complexity(benchmark::oN);

void BM_GSign(benchmark::State& state) {
    std::int64_t k = state.range(0);
    std::int64_t q = worst_q(k);
    for (auto _ : state) {
        gg::Rat v = gg::g_sign(k, q, k / 2);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_GSign)->Arg(100)->Arg(1000)->Arg(10000);

void BM_GScaledTable(benchmark::State& state) {
    std::int64_t k = state.range(0);
    std::int64_t q = worst_q(k);
    for (auto _ : state) {
        auto t = gg::g_scaled_table(k, q);
        benchmark::DoNotOptimize(t.data());
    }
    state.SetComplexityN(k);
}
BENCHMARK(BM_GScaledTable)->Arg(100)->Arg(1000)->Arg(10000)->Complexity(benchmark::oN);

void BM_BigG_Fast(benchmark::State& state) {
    std::int64_t k = state.range(0);
    std::int64_t q = worst_q(k);
    for (auto _ : state) {
        gg::Rat v = gg::big_g(k, q);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_BigG_Fast)->Arg(100)->Arg(1000)->Arg(10000);

void BM_BigG_Brute(benchmark::State& state) {
    std::int64_t k = state.range(0);
    std::int64_t q = worst_q(k);
    for (auto _ : state) {
        gg::Rat v = gg::big_g_brute(k, q);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_BigG_Brute)->Arg(100)->Arg(1000);

void BM_BigN(benchmark::State& state) {
    std::int64_t k = state.range(0);
    std::int64_t q = worst_q(k);
    for (auto _ : state) {
        std::int64_t n = gg::big_n(k, q);
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_BigN)->Arg(100)->Arg(10000);

void BM_PPoly(benchmark::State& state) {
    std::int64_t k = state.range(0);
    std::int64_t q = worst_q(k);
    for (auto _ : state) {
        gg::LaurentPoly p = gg::p_poly(k, q, 1);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_PPoly)->Arg(100)->Arg(1000);

void BM_TwoGChunk(benchmark::State& state) {
    std::int64_t k = state.range(0);
    for (auto _ : state) {
        gg::verify::Report r = gg::verify::two_g_chunk(k, 0);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_TwoGChunk)->Arg(100)->Arg(500);

void BM_IdentitiesChunk(benchmark::State& state) {
    std::int64_t k = state.range(0);
    for (auto _ : state) {
        gg::verify::Report r = gg::verify::identities_chunk(k, 20);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_IdentitiesChunk)->Arg(20)->Arg(60);

} // namespace

BENCHMARK_MAIN();
