#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/// Dense univariate polynomial over Rational, coefficients ascending by
/// degree.  The zero polynomial is the empty coefficient list; a nonzero
/// polynomial never has a trailing zero coefficient, so degree() is always
/// coeffs().size() - 1.  Values are immutable after construction.
class Poly {
public:
    Poly() = default;  // zero polynomial
    explicit Poly(std::vector<Rational> coeffs);

    static Poly constant(const Rational& c);
    static Poly monomial(std::size_t k, const Rational& c = Rational(1));
    /// The variable t.
    static Poly variable() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of a nonzero polynomial; asking for the degree of zero throws.
    std::size_t degree() const;
    /// True for the zero polynomial or any polynomial of degree <= n.
    bool degree_at_most(std::size_t n) const { return coeffs_.size() <= n + 1; }

    /// Coefficient of t^k (zero beyond the stored range).
    Rational coeff(std::size_t k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational leading() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scale(const Rational& c) const;
    Poly pow(std::size_t e) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Exact Horner evaluation.
    Rational eval(const Rational& x) const;
    /// P(t + a) by binomial expansion.
    Poly shift(const Rational& a) const;
    /// P(-t).
    Poly reflect() const;
    Poly derivative() const;
    /// The primitive with zero constant term.
    Poly antiderivative() const;

    /// Human-readable form, e.g. "t^3 - 3 t^2 + 2 t".
    std::string str(const std::string& var = "t") const;
    friend std::ostream& operator<<(std::ostream& os, const Poly& p);

private:
    void trim();

    std::vector<Rational> coeffs_;
};

}  // namespace umbral
