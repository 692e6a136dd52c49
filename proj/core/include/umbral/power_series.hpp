#pragma once

#include <cstddef>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/// Truncated formal power series: coefficients of z^0 .. z^order.
class PowerSeries {
public:
    explicit PowerSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}
    /// Coefficient list fixes the order as size - 1; must be nonempty.
    static PowerSeries from_coeffs(std::vector<Rational> coeffs);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& coeff(std::size_t k) const { return coeffs_[k]; }
    Rational& coeff(std::size_t k) { return coeffs_[k]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    PowerSeries truncated(std::size_t new_order) const;

    friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g);
    friend PowerSeries operator-(const PowerSeries& f, const PowerSeries& g);
    /// Product truncated to the smaller order.
    friend PowerSeries operator*(const PowerSeries& f, const PowerSeries& g);
    PowerSeries scale(const Rational& c) const;

    friend bool operator==(const PowerSeries& f, const PowerSeries& g) {
        return f.coeffs_ == g.coeffs_;
    }
    friend bool operator!=(const PowerSeries& f, const PowerSeries& g) { return !(f == g); }

    /// Multiplicative inverse to the same order; requires a unit constant
    /// term (throws DomainError(NonUnitSeries)).
    PowerSeries reciprocal() const;

    /// Termwise derivative, one order lower (order 0 input yields the zero
    /// series of order 0).
    PowerSeries derivative() const;

    /// Compositional inverse psi with phi(psi(z)) = z, by an order-by-order
    /// triangular solve.  Requires coeff(0) = 0 and coeff(1) != 0, else
    /// DomainError(NotInvertibleSeries).
    PowerSeries compositional_inverse() const;

    /// z phi'(z) / phi(z), defined when coeff(0) = 0 and coeff(1) != 0 (the
    /// apparent pole cancels); result has order - 1.
    PowerSeries z_dlog() const;

    /// Composition f(g) truncated to min(orders); requires g.coeff(0) = 0.
    static PowerSeries compose(const PowerSeries& f, const PowerSeries& g);

private:
    std::vector<Rational> coeffs_;
};

}  // namespace umbral
