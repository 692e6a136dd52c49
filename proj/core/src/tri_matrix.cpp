#include "umbral/tri_matrix.hpp"

#include "umbral/binomial.hpp"
#include "umbral/errors.hpp"

namespace umbral {

LowerTriMatrix::LowerTriMatrix(std::size_t size) {
    rows_.reserve(size);
    for (std::size_t i = 0; i < size; ++i) rows_.emplace_back(i + 1, Rational(0));
}

LowerTriMatrix LowerTriMatrix::identity(std::size_t size) {
    LowerTriMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) m.rows_[i][i] = Rational(1);
    return m;
}

Rational LowerTriMatrix::at(std::size_t i, std::size_t j) const {
    if (j > i) return Rational(0);
    return rows_[i][j];
}

Rational& LowerTriMatrix::entry(std::size_t i, std::size_t j) { return rows_[i].at(j); }

LowerTriMatrix operator*(const LowerTriMatrix& a, const LowerTriMatrix& b) {
    LowerTriMatrix c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            Rational acc(0);
            for (std::size_t k = j; k <= i; ++k) acc += a.rows_[i][k] * b.rows_[k][j];
            c.rows_[i][j] = acc;
        }
    return c;
}

Seq LowerTriMatrix::apply(const Seq& v) const {
    if (v.level() + 1 != size())
        throw DomainError("LevelMismatch", "matrix/vector size mismatch");
    Seq w(v.level());
    for (std::size_t i = 0; i < size(); ++i) {
        Rational acc(0);
        for (std::size_t j = 0; j <= i; ++j) acc += rows_[i][j] * v.entry(j);
        w.entry(i) = acc;
    }
    return w;
}

std::vector<Rational> LowerTriMatrix::apply(const std::vector<Rational>& v) const {
    std::vector<Rational> w(size(), Rational(0));
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) w[i] += rows_[i][j] * v[j];
    return w;
}

Seq LowerTriMatrix::solve(const Seq& y) const {
    if (y.level() + 1 != size())
        throw DomainError("LevelMismatch", "matrix/vector size mismatch");
    Seq x(y.level());
    for (std::size_t i = 0; i < size(); ++i) {
        if (rows_[i][i].is_zero())
            throw DomainError("SingularMatrix", "zero diagonal entry in triangular solve");
        Rational acc = y.entry(i);
        for (std::size_t j = 0; j < i; ++j) acc -= rows_[i][j] * x.entry(j);
        x.entry(i) = acc / rows_[i][i];
    }
    return x;
}

LowerTriMatrix LowerTriMatrix::inverse() const {
    LowerTriMatrix inv(size());
    for (std::size_t col = 0; col < size(); ++col) {
        Seq x = solve(Seq::basis(size() - 1, col));
        for (std::size_t i = col; i < size(); ++i) inv.rows_[i][col] = x.entry(i);
    }
    return inv;
}

Rational LowerTriMatrix::det() const {
    Rational d(1);
    for (std::size_t i = 0; i < size(); ++i) d *= rows_[i][i];
    return d;
}

LowerTriMatrix conv_matrix(const Seq& a) {
    LowerTriMatrix m(a.level() + 1);
    for (std::size_t i = 0; i <= a.level(); ++i)
        for (std::size_t j = 0; j <= i; ++j) m.entry(i, j) = binomial(i, j) * a.entry(i - j);
    return m;
}

LowerTriMatrix creation_matrix(std::size_t n) {
    LowerTriMatrix m(n + 1);
    for (std::size_t i = 1; i <= n; ++i) m.entry(i, i - 1) = Rational(static_cast<long>(i));
    return m;
}

}  // namespace umbral
