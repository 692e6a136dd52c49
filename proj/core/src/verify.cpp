#include "umbral/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "umbral/curve.hpp"
#include "umbral/deviation.hpp"
#include "umbral/errors.hpp"
#include "umbral/pairing.hpp"

namespace umbral {

namespace {

constexpr long kDenominator = 1000000;

// Integer draw in [lo, hi] straight off the engine; modulo bias at 2^64
// scale is irrelevant here and the result is identical on every platform,
// unlike std::uniform_int_distribution.
long draw_int(std::mt19937_64& rng, long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng() % span);
}

Rational draw_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi) {
    const double lod = lo.to_double();
    const double hid = hi.to_double();
    const long lo_ticks = static_cast<long>(std::ceil(lod * kDenominator));
    const long hi_ticks = static_cast<long>(std::floor(hid * kDenominator));
    const long ticks = draw_int(rng, lo_ticks, std::max(lo_ticks, hi_ticks));
    return Rational(ticks, kDenominator);
}

}  // namespace

SampledPoly sample_poly_in_strip_exact(std::size_t n, const Strip& strip, std::uint64_t seed) {
    if (!(std::isfinite(strip.lo) && std::isfinite(strip.hi)) || strip.lo > strip.hi)
        throw DomainError("ParseError", "sampling needs a finite strip");
    std::mt19937_64 rng(seed);
    const Rational lo = Rational(static_cast<long>(std::ceil(strip.lo * kDenominator)),
                                 kDenominator);
    const Rational hi = Rational(static_cast<long>(std::floor(strip.hi * kDenominator)),
                                 kDenominator);

    SampledPoly out;
    out.poly = Poly::constant(1);
    bool first = true;
    auto track = [&](const Rational& re) {
        if (first || re < out.re_lo) out.re_lo = re;
        if (first || re > out.re_hi) out.re_hi = re;
        first = false;
    };

    const std::size_t pairs = n / 2;
    for (std::size_t i = 0; i < pairs; ++i) {
        const Rational x = draw_rational(rng, lo, hi);
        const Rational y = draw_rational(rng, Rational(-2), Rational(2));
        // (t - (x+iy))(t - (x-iy)) = t^2 - 2x t + x^2 + y^2
        out.poly = out.poly * Poly({x * x + y * y, Rational(-2) * x, Rational(1)});
        track(x);
    }
    if (n % 2 == 1) {
        const Rational x = draw_rational(rng, lo, hi);
        out.poly = out.poly * Poly({-x, Rational(1)});
        track(x);
    }
    if (n == 0) {
        out.re_lo = Rational(0);
        out.re_hi = Rational(0);
    }
    return out;
}

Poly sample_poly_in_strip(std::size_t n, const Strip& strip, std::uint64_t seed) {
    return sample_poly_in_strip_exact(n, strip, seed).poly;
}

VerificationReport verify_deviation_line(std::size_t n_max, double tol) {
    VerificationReport report;
    report.tol = tol;
    report.trials = n_max;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const Poly rn = deviation_poly(DeltaOp::forward_difference(n), n);
        const double center = -(static_cast<double>(n) - 1.0) / 2.0;
        const auto roots = poly_roots(ComplexPoly::from_poly(rn), 1e-13, 1000);
        double deviation = 0.0;
        for (const auto& r : roots) deviation = std::max(deviation, std::abs(r.real() - center));
        report.worst_margin = std::max(report.worst_margin, deviation);
        if (deviation > tol) ++report.violations;
    }
    return report;
}

VerificationReport verify_walsh(std::size_t n, std::size_t trials, std::uint64_t seed,
                                double tol) {
    VerificationReport report;
    report.seed = seed;
    report.tol = tol;
    report.trials = trials;
    report.worst_margin = std::numeric_limits<double>::infinity();
    const DeltaOp delta = DeltaOp::forward_difference(n);
    const Strip box{-2.0, 2.0};
    const double shift = (static_cast<double>(n) - 1.0) / 2.0;

    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::mt19937_64 mix(seed ^ static_cast<std::uint64_t>(trial));
        const SampledPoly p = sample_poly_in_strip_exact(n, box, mix());
        const SampledPoly q = sample_poly_in_strip_exact(n, box, mix());
        const Poly conv = umbral_add_convolve(p.poly, q.poly, delta, n);
        const double lo = p.re_lo.to_double() + q.re_lo.to_double() - shift;
        const double hi = p.re_hi.to_double() + q.re_hi.to_double() - shift;
        for (const auto& root : poly_roots(ComplexPoly::from_poly(conv))) {
            const double slack = std::min(root.real() - lo, hi - root.real());
            report.worst_margin = std::min(report.worst_margin, slack);
            if (slack < -tol) ++report.violations;
        }
    }
    return report;
}

VerificationReport verify_grace(const Poly& p, const Poly& q, std::size_t n, double tol) {
    if (p.is_zero() || q.is_zero() || p.degree() != n || q.degree() != n)
        throw DomainError("WrongDegree", "Grace check needs deg P = deg Q = n");
    const DeltaOp delta = DeltaOp::forward_difference(n);
    if (!polarity_pairing(p, q, delta, n).value.is_zero())
        throw DomainError("NotApolar", "pair is not apolar for the forward difference");

    const Strip vp = root_strip(ComplexPoly::from_poly(p));
    const Strip vq = root_strip(ComplexPoly::from_poly(q));
    const double shift = (static_cast<double>(n) - 1.0) / 2.0;
    const double overlap =
        std::min(vp.hi, vq.hi + shift) - std::max(vp.lo, vq.lo + shift);

    VerificationReport report;
    report.tol = tol;
    report.trials = 1;
    report.worst_margin = overlap;
    if (overlap < -tol) report.violations = 1;
    return report;
}

VerificationReport verify_grace_trials(std::size_t n, std::size_t trials, std::uint64_t seed,
                                       double tol) {
    VerificationReport report;
    report.seed = seed;
    report.tol = tol;
    report.trials = trials;
    report.worst_margin = std::numeric_limits<double>::infinity();
    const DeltaOp delta = DeltaOp::forward_difference(n);
    const Strip box{-2.0, 2.0};

    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::mt19937_64 mix(seed ^ static_cast<std::uint64_t>(trial));
        const Poly p = sample_poly_in_strip(n, box, mix());
        const Poly q_base = sample_poly_in_strip(n, box, mix());
        // The pairing is affine in the constant coefficient of Q with
        // nonzero slope, so one coefficient makes the pair exactly apolar.
        const Rational f0 = polarity_pairing(p, q_base, delta, n).value;
        const Rational f1 =
            polarity_pairing(p, q_base + Poly::constant(1), delta, n).value;
        const Poly q = q_base + Poly::constant(-f0 / (f1 - f0));

        const VerificationReport single = verify_grace(p, q, n, tol);
        report.worst_margin = std::min(report.worst_margin, single.worst_margin);
        report.violations += single.violations;
    }
    return report;
}

}  // namespace umbral
