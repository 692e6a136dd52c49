#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "umbral/poly.hpp"
#include "umbral/power_series.hpp"
#include "umbral/rational.hpp"

namespace umbral {

/// Delta operator at a fixed level n: the endomorphism
/// a_1 d/dt + a_2 d^2/dt^2 + ... + a_n d^n/dt^n of the polynomials of
/// degree <= n, with a_1 != 0.  The registry constructors carry their
/// defining symbol series phi (with the operator equal to phi(d/dt)), which
/// fixes the canonical extension to higher levels; raw coefficient
/// operators extend by zero unless extended_with() is used.
class DeltaOp {
public:
    /// coeffs[k-1] holds a_k; level = coeffs.size(); a_1 must be nonzero.
    static DeltaOp from_coeffs(std::vector<Rational> coeffs);

    static DeltaOp derivative(std::size_t level);
    /// Forward difference P(t+1) - P(t): a_k = 1/k!.
    static DeltaOp forward_difference(std::size_t level);
    /// Backward difference P(t) - P(t-1): a_k = (-1)^{k+1}/k!.
    static DeltaOp backward_difference(std::size_t level);
    /// Abel operator P'(t+a): a_p = a^{p-1}/(p-1)!.
    static DeltaOp abel(std::size_t level, const Rational& a);
    /// log(1 + d/dt): a_p = (-1)^{p+1}/p; binomial sequence is Touchard.
    static DeltaOp touchard(std::size_t level);

    /// Registry lookup: "derivative", "forward_difference",
    /// "backward_difference", "abel:a=<q>", "touchard".
    static DeltaOp from_name(const std::string& name, std::size_t level);

    std::size_t level() const { return coeffs_.size(); }
    /// a_k for 1 <= k <= level.
    const Rational& coeff(std::size_t k) const { return coeffs_[k - 1]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_named() const;
    /// Registry name, empty for raw coefficient operators.
    std::string name() const;

    /// Applies the operator; requires deg P <= level
    /// (DomainError(DegreeExceedsLevel) otherwise).
    Poly apply(const Poly& p) const;
    Poly apply_iter(const Poly& p, std::size_t times) const;

    /// Adjoint under P(t) -> P(-t): coefficients a_k (-1)^{k+1}.  An
    /// involution; maps forward to backward difference and abel:a to
    /// abel:-a.
    DeltaOp adjoint() const;

    /// Same operator at a different level.  Named operators extend by their
    /// defining formula; raw ones pad with zeros.
    DeltaOp resized(std::size_t new_level) const;
    /// Level + 1 with an explicit choice of a_{level+1}.
    DeltaOp extended_with(const Rational& next_coeff) const;

    /// Symbol series phi(z) = sum a_k z^k to the requested order, using the
    /// canonical (named) or zero (raw) extension beyond the stored level.
    PowerSeries phi(std::size_t order) const;

    friend bool operator==(const DeltaOp& a, const DeltaOp& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const DeltaOp& a, const DeltaOp& b) { return !(a == b); }

private:
    enum class Family { Raw, Derivative, Forward, Backward, Abel, Touchard };

    DeltaOp(Family family, std::size_t level, const Rational& abel_a);

    Rational family_coeff(std::size_t k) const;

    Family family_ = Family::Raw;
    Rational abel_a_;
    std::vector<Rational> coeffs_;
};

}  // namespace umbral
