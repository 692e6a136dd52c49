#include "umbral/rational.hpp"

#include <cctype>
#include <ostream>

#include "umbral/errors.hpp"

namespace umbral {

Rational::Rational(long num, long den) {
    if (den == 0) throw DomainError("DivisionByZero", "rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class q) : value_(std::move(q)) {
    if (sgn(value_.get_den()) == 0)
        throw DomainError("DivisionByZero", "rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    // strict shape: -?digits(/digits)?
    std::size_t i = 0;
    auto digits = [&](std::size_t& pos) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return pos > start;
    };
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (!digits(i)) throw DomainError("ParseError", "bad rational: '" + text + "'");
    if (i < text.size()) {
        if (text[i] != '/') throw DomainError("ParseError", "bad rational: '" + text + "'");
        ++i;
        if (!digits(i) || i != text.size())
            throw DomainError("ParseError", "bad rational: '" + text + "'");
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw DomainError("ParseError", "bad rational: '" + text + "'");
    if (sgn(q.get_den()) == 0)
        throw DomainError("ParseError", "zero denominator in '" + text + "'");
    q.canonicalize();
    Rational r;
    r.value_ = std::move(q);
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.value_ = ::abs(value_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("DivisionByZero", "inverse of zero");
    Rational r;
    r.value_ = 1 / value_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}
Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}
Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}
Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("DivisionByZero", "division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, std::size_t exp) {
    Rational result(1);
    Rational b = base;
    while (exp > 0) {
        if (exp & 1U) result *= b;
        exp >>= 1U;
        if (exp > 0) b *= b;
    }
    return result;
}

}  // namespace umbral
