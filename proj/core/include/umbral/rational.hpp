#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>

namespace umbral {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (canonical zero is 0/1).  Value wrapper around GMP's
/// mpq_class so expression templates never leak into client code.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // NOLINT: implicit on purpose for literals
    Rational(long num, long den);
    explicit Rational(const mpz_class& z) : value_(z) {}
    explicit Rational(mpq_class q);

    /// Parses "p" or "p/q" (optionally signed), reducing to lowest terms.
    /// Throws DomainError(ParseError) on malformed input or zero denominator.
    static Rational parse(const std::string& text);

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    /// Lowest-terms string, "p" or "p/q".
    std::string str() const { return value_.get_str(); }
    double to_double() const { return value_.get_d(); }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    Rational operator-() const;
    Rational abs() const;
    Rational inverse() const;  // throws DomainError(DivisionByZero) on zero

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) < 0;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) <= 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class value_;
};

Rational pow(const Rational& base, std::size_t exp);

}  // namespace umbral
