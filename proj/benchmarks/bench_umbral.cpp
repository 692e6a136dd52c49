#include <benchmark/benchmark.h>

#include <random>

#include "umbral/curve.hpp"
#include "umbral/deviation.hpp"
#include "umbral/pairing.hpp"
#include "umbral/roots.hpp"
#include "umbral/seq.hpp"
#include "umbral/verify.hpp"
#include "umbral/wronskian.hpp"

using namespace umbral;

namespace {

Seq rational_seq(std::size_t level, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Rational> entries(level + 1);
    for (auto& e : entries)
        e = Rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 7));
    if (entries[0].is_zero()) entries[0] = Rational(1);
    return Seq::from_entries(std::move(entries));
}

}  // namespace

static void BM_binom_convolve(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const Seq a = rational_seq(n, 1);
    const Seq b = rational_seq(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(binom_convolve(a, b));
}
BENCHMARK(BM_binom_convolve)->Arg(8)->Arg(32)->Arg(128);

static void BM_binomial_curve(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const DeltaOp d = DeltaOp::forward_difference(n);
    for (auto _ : state) benchmark::DoNotOptimize(binomial_curve(d));
}
BENCHMARK(BM_binomial_curve)->Arg(8)->Arg(16)->Arg(32);

static void BM_polarity_pairing(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const DeltaOp d = DeltaOp::forward_difference(n);
    const Curve eta = binomial_curve(d);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            polarity_pairing(eta.component(n), eta.component(n).reflect(), d, n));
}
BENCHMARK(BM_polarity_pairing)->Arg(4)->Arg(8)->Arg(12);

static void BM_deviation_poly(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const DeltaOp d = DeltaOp::forward_difference(n);
    for (auto _ : state) benchmark::DoNotOptimize(deviation_poly(d, n));
}
BENCHMARK(BM_deviation_poly)->Arg(4)->Arg(8)->Arg(12);

static void BM_dual_curve(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const DeltaOp d = DeltaOp::forward_difference(n);
    const Curve theta = sheffer_curve(rational_seq(n, 3), binomial_curve(d));
    for (auto _ : state) benchmark::DoNotOptimize(dual_curve(theta, d));
}
BENCHMARK(BM_dual_curve)->Arg(4)->Arg(8)->Arg(12);

static void BM_poly_roots(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const Poly p = sample_poly_in_strip(n, {-2.0, 2.0}, 99);
    const ComplexPoly cp = ComplexPoly::from_poly(p);
    for (auto _ : state) benchmark::DoNotOptimize(poly_roots(cp));
}
BENCHMARK(BM_poly_roots)->Arg(4)->Arg(8)->Arg(16);

static void BM_walsh_trial(benchmark::State& state) {
    const std::size_t n = state.range(0);
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(verify_walsh(n, 1, seed++, 1e-7));
}
BENCHMARK(BM_walsh_trial)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
