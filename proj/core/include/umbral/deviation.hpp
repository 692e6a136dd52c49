#pragma once

#include <cstddef>
#include <vector>

#include "umbral/delta_op.hpp"
#include "umbral/pairing.hpp"
#include "umbral/poly.hpp"
#include "umbral/rational.hpp"

namespace umbral {

/// Deviation polynomial R_n: the inverse of the level-n binomial component
/// S_n of d under the CLASSICAL additive convolution, R_n [+]_n S_n = t^n.
Poly deviation_poly(const DeltaOp& d, std::size_t n);

/// R_n(alpha) recovered through the umbral pairing,
/// n! R_n(alpha) = <t^n, (alpha - t)^n>_n.
Rational deviation_via_pairing(const DeltaOp& d, std::size_t n, const Rational& alpha);

/// Checks the recurrence R'_n = R_{n-1} [+]_{n-1} d t^n exactly.
/// Requires 2 <= n <= d.level().
bool deviation_recurrence_check(const DeltaOp& d, std::size_t n);

/// Appell sequence A_0..A_order attached to d: A_n(t) = sum_k C(n,k) a_k
/// t^{n-k} with a_k = k! [z^k] (z dlog phi)^{-1}.  Uses d's symbol series
/// phi one order past `order`; raw operators extend by zero unless
/// pre-extended with extended_with().  The Appell property A'_n = n A_{n-1}
/// is checked before returning.
std::vector<Poly> appell_from_structure(const DeltaOp& d, std::size_t order);

/// R_n via the generating-series route: apply P -> d(antiderivative(P))
/// n times to A_n.  Agrees with deviation_poly for every extension choice.
Poly deviation_via_appell(const DeltaOp& d, std::size_t n);

/// Closed form for the forward difference: R_n = n! D^n(L t^{2n+1}) / (2n+1)!
/// with D/L the forward/backward difference, evaluated exactly at level 2n+1.
Poly deviation_closed_delta(std::size_t n);

/// Checks both bridge identities between the umbral and classical
/// operations:  <P,Q>^d = <R_n [+] P, Q> = (-1)^n <P, R_n(-t) [+] Q>  and
/// P [+]^d Q = R_n [+] P [+] Q.
bool umbral_vs_classical_bridge(const Poly& p, const Poly& q, const DeltaOp& d, std::size_t n);

}  // namespace umbral
