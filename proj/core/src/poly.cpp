#include "umbral/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "umbral/binomial.hpp"
#include "umbral/errors.hpp"

namespace umbral {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const Rational& c) {
    if (c.is_zero()) return {};
    return Poly({c});
}

Poly Poly::monomial(std::size_t k, const Rational& c) {
    if (c.is_zero()) return {};
    std::vector<Rational> cs(k + 1, Rational(0));
    cs[k] = c;
    return Poly(std::move(cs));
}

std::size_t Poly::degree() const {
    if (is_zero()) throw DomainError("WrongDegree", "degree of the zero polynomial");
    return coeffs_.size() - 1;
}

Rational Poly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Poly::leading() const {
    if (is_zero()) throw DomainError("WrongDegree", "leading coefficient of zero");
    return coeffs_.back();
}

Poly Poly::operator-() const {
    std::vector<Rational> cs(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i] = -coeffs_[i];
    return Poly(std::move(cs));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) cs[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) cs[i] += b.coeffs_[i];
    return Poly(std::move(cs));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> cs(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(cs));
}

Poly Poly::scale(const Rational& c) const {
    if (c.is_zero()) return {};
    std::vector<Rational> cs(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i] = coeffs_[i] * c;
    return Poly(std::move(cs));
}

Poly Poly::pow(std::size_t e) const {
    Poly result = Poly::constant(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Poly Poly::shift(const Rational& a) const {
    if (a.is_zero() || is_zero()) return *this;
    std::vector<Rational> cs(coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        Rational apow(1);
        for (std::size_t j = i + 1; j-- > 0;) {
            cs[j] += coeffs_[i] * binomial(i, j) * apow;
            apow *= a;
        }
    }
    return Poly(std::move(cs));
}

Poly Poly::reflect() const {
    std::vector<Rational> cs(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        cs[i] = (i % 2 == 0) ? coeffs_[i] : -coeffs_[i];
    return Poly(std::move(cs));
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> cs(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) cs[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(cs));
}

Poly Poly::antiderivative() const {
    if (is_zero()) return {};
    std::vector<Rational> cs(coeffs_.size() + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        cs[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
    return Poly(std::move(cs));
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = (a == Rational(1));
        if (i == 0) {
            os << a.str();
        } else {
            if (!unit) os << a.str() << " ";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace umbral
