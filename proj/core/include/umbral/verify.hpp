#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "umbral/poly.hpp"
#include "umbral/rational.hpp"
#include "umbral/roots.hpp"

namespace umbral {

/// Outcome of a verification campaign.  Deterministic given the seed;
/// worst_margin is the smallest signed slack seen (negative means a
/// violation beyond tolerance was possible).
struct VerificationReport {
    std::uint64_t trials = 0;
    std::uint64_t violations = 0;
    double worst_margin = 0.0;
    std::uint64_t seed = 0;
    double tol = 0.0;
};

/// Monic real polynomial with exactly known rational root data: complex
/// roots come in conjugate pairs so the expanded coefficients stay real.
struct SampledPoly {
    Poly poly;
    Rational re_lo;
    Rational re_hi;
};

/// Degree-n monic polynomial whose roots have Re uniform in the strip and
/// Im uniform in [-2, 2], rationalized to denominator 10^6 and expanded
/// exactly over conjugate pairs (odd degree adds one real root).
/// Deterministic per seed.
SampledPoly sample_poly_in_strip_exact(std::size_t n, const Strip& strip, std::uint64_t seed);
Poly sample_poly_in_strip(std::size_t n, const Strip& strip, std::uint64_t seed);

/// Deviation root line for the forward difference: for each n <= n_max the
/// exact R_n is computed, converted to floats once, and the largest
/// |Re(root) + (n-1)/2| is compared against tol.
VerificationReport verify_deviation_line(std::size_t n_max, double tol);

/// Umbral Walsh check at level n: per trial, P and Q of degree n are
/// sampled in the [-2,2]^2 box, P [+]^Delta Q is computed exactly, and all
/// roots must have Re within [V(P)+V(Q) - (n-1)/2] up to tol.  Trial seeds
/// are seed XOR trial index, so results do not depend on scheduling.
VerificationReport verify_walsh(std::size_t n, std::size_t trials, std::uint64_t seed,
                                double tol);

/// Umbral Grace check for one exactly-apolar pair: requires
/// <P,Q>^Delta_n = 0 (DomainError(NotApolar) otherwise), then intersects
/// V(P) with V(Q) + (n-1)/2 numerically.
VerificationReport verify_grace(const Poly& p, const Poly& q, std::size_t n, double tol);

/// Seeded Grace campaign: random P, random Q with its constant coefficient
/// solved so that the pair is exactly apolar, then the strip intersection
/// check per trial.
VerificationReport verify_grace_trials(std::size_t n, std::size_t trials, std::uint64_t seed,
                                       double tol);

}  // namespace umbral
