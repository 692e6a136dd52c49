#include "umbral/delta_op.hpp"

#include "umbral/binomial.hpp"
#include "umbral/errors.hpp"

namespace umbral {

DeltaOp::DeltaOp(Family family, std::size_t level, const Rational& abel_a)
    : family_(family), abel_a_(abel_a) {
    if (level < 1) throw DomainError("WrongDegree", "delta operator needs level >= 1");
    coeffs_.reserve(level);
    for (std::size_t k = 1; k <= level; ++k) coeffs_.push_back(family_coeff(k));
}

Rational DeltaOp::family_coeff(std::size_t k) const {
    switch (family_) {
        case Family::Derivative:
            return k == 1 ? Rational(1) : Rational(0);
        case Family::Forward:
            return factorial(k).inverse();
        case Family::Backward:
            return (k % 2 == 1 ? Rational(1) : Rational(-1)) / factorial(k);
        case Family::Abel:
            return pow(abel_a_, k - 1) / factorial(k - 1);
        case Family::Touchard:
            return (k % 2 == 1 ? Rational(1) : Rational(-1)) / Rational(static_cast<long>(k));
        case Family::Raw:
            return k <= coeffs_.size() ? coeffs_[k - 1] : Rational(0);
    }
    return Rational(0);
}

DeltaOp DeltaOp::from_coeffs(std::vector<Rational> coeffs) {
    if (coeffs.empty()) throw DomainError("WrongDegree", "delta operator needs level >= 1");
    if (coeffs[0].is_zero())
        throw DomainError("NotInvertibleSeq", "delta operator needs a_1 != 0");
    DeltaOp d(Family::Raw, 1, Rational(0));
    d.coeffs_ = std::move(coeffs);
    return d;
}

DeltaOp DeltaOp::derivative(std::size_t level) {
    return DeltaOp(Family::Derivative, level, Rational(0));
}
DeltaOp DeltaOp::forward_difference(std::size_t level) {
    return DeltaOp(Family::Forward, level, Rational(0));
}
DeltaOp DeltaOp::backward_difference(std::size_t level) {
    return DeltaOp(Family::Backward, level, Rational(0));
}
DeltaOp DeltaOp::abel(std::size_t level, const Rational& a) {
    return DeltaOp(Family::Abel, level, a);
}
DeltaOp DeltaOp::touchard(std::size_t level) {
    return DeltaOp(Family::Touchard, level, Rational(0));
}

DeltaOp DeltaOp::from_name(const std::string& name, std::size_t level) {
    if (name == "derivative") return derivative(level);
    if (name == "forward_difference") return forward_difference(level);
    if (name == "backward_difference") return backward_difference(level);
    if (name == "touchard") return touchard(level);
    if (name.rfind("abel:a=", 0) == 0) return abel(level, Rational::parse(name.substr(7)));
    throw DomainError("ParseError", "unknown operator name: '" + name + "'");
}

bool DeltaOp::is_named() const { return family_ != Family::Raw; }

std::string DeltaOp::name() const {
    switch (family_) {
        case Family::Derivative: return "derivative";
        case Family::Forward: return "forward_difference";
        case Family::Backward: return "backward_difference";
        case Family::Abel: return "abel:a=" + abel_a_.str();
        case Family::Touchard: return "touchard";
        case Family::Raw: return "";
    }
    return "";
}

Poly DeltaOp::apply(const Poly& p) const {
    if (!p.degree_at_most(level()))
        throw DomainError("DegreeExceedsLevel", "polynomial degree exceeds operator level");
    Poly acc;
    Poly der = p;
    for (std::size_t k = 1; k <= level(); ++k) {
        der = der.derivative();
        if (der.is_zero()) break;
        if (!coeff(k).is_zero()) acc = acc + der.scale(coeff(k));
    }
    return acc;
}

Poly DeltaOp::apply_iter(const Poly& p, std::size_t times) const {
    Poly q = p;
    for (std::size_t i = 0; i < times && !q.is_zero(); ++i) q = apply(q);
    return q;
}

DeltaOp DeltaOp::adjoint() const {
    switch (family_) {
        case Family::Derivative: return *this;
        case Family::Forward: return backward_difference(level());
        case Family::Backward: return forward_difference(level());
        case Family::Abel: return abel(level(), -abel_a_);
        default: break;
    }
    std::vector<Rational> cs(coeffs_);
    for (std::size_t k = 2; k <= cs.size(); k += 2) cs[k - 1] = -cs[k - 1];
    return from_coeffs(std::move(cs));
}

DeltaOp DeltaOp::resized(std::size_t new_level) const {
    if (new_level < 1) throw DomainError("WrongDegree", "delta operator needs level >= 1");
    if (family_ != Family::Raw) return DeltaOp(family_, new_level, abel_a_);
    std::vector<Rational> cs(coeffs_);
    cs.resize(new_level, Rational(0));
    return from_coeffs(std::move(cs));
}

DeltaOp DeltaOp::extended_with(const Rational& next_coeff) const {
    std::vector<Rational> cs(coeffs_);
    cs.push_back(next_coeff);
    DeltaOp d = from_coeffs(std::move(cs));
    return d;
}

PowerSeries DeltaOp::phi(std::size_t order) const {
    PowerSeries f(order);
    for (std::size_t k = 1; k <= order; ++k) f.coeff(k) = family_coeff(k);
    return f;
}

}  // namespace umbral
