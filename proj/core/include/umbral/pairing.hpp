#pragma once

#include <cstddef>

#include "umbral/delta_op.hpp"
#include "umbral/poly.hpp"
#include "umbral/rational.hpp"

namespace umbral {

/// Result of evaluating a polarity pairing: the constant value plus the
/// nonconstant residual of the pairing polynomial, which must be zero.
struct PairingReport {
    Rational value;
    Poly residual;
};

/// Umbral polarity pairing sum_p (-1)^{n-p} d^p A . (d*)^{n-p} B at level n.
/// The sum is a constant polynomial; a nonzero residual would be an
/// implementation bug and raises DomainError(NonConstantPairing).
/// Requires deg A, deg B <= n <= d.level().
PairingReport polarity_pairing(const Poly& a, const Poly& b, const DeltaOp& d, std::size_t n);

/// Umbral additive convolution at level n:
/// (1/n!) sum_k (d^k P)(0) (d^{n-k} Q)(z).  Symmetric and bilinear with the
/// level-n binomial component S_n as neutral element.
Poly umbral_add_convolve(const Poly& p, const Poly& q, const DeltaOp& d, std::size_t n);

/// Solves P [+]_n X = S_n for X.  Only degree-n polynomials are invertible;
/// lower degree raises DomainError(NotInvertiblePoly).
Poly add_conv_inverse(const Poly& p, const DeltaOp& d, std::size_t n);

}  // namespace umbral
