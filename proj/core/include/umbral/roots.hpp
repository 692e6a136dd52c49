#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "umbral/poly.hpp"

namespace umbral {

/// Dense complex polynomial in double precision, ascending coefficients.
struct ComplexPoly {
    std::vector<std::complex<double>> coeffs;

    static ComplexPoly from_poly(const Poly& p);

    std::size_t degree() const { return coeffs.size() - 1; }
    std::complex<double> eval(const std::complex<double>& z) const;
    std::complex<double> eval_derivative(const std::complex<double>& z) const;
};

/// Vertical strip a <= Re(z) <= b (bounds may be infinite).
struct Strip {
    double lo = 0.0;
    double hi = 0.0;
};

/// All roots by Aberth-Ehrlich simultaneous iteration.  The polynomial is
/// normalized to unit leading coefficient; initial guesses sit on a circle
/// of radius 1 + max |a_k/a_n| with golden-angle spacing; a root stops when
/// its correction drops below tol relative to its magnitude or its value
/// reaches the double-precision evaluation-noise floor.  Throws
/// NoConvergence (carrying per-root residuals) past max_iter.
std::vector<std::complex<double>> poly_roots(const ComplexPoly& p, double tol = 1e-12,
                                             int max_iter = 400);

/// Smallest vertical strip containing all roots.
Strip root_strip(const ComplexPoly& p, double tol = 1e-12);

}  // namespace umbral
