#pragma once

#include <cstddef>
#include <vector>

#include "umbral/rational.hpp"
#include "umbral/seq.hpp"

namespace umbral {

/// Lower-triangular (n+1) x (n+1) matrix with exact entries, indices in
/// [0, n].  Only the lower triangle is stored; reads above the diagonal
/// return zero.
class LowerTriMatrix {
public:
    explicit LowerTriMatrix(std::size_t size);
    static LowerTriMatrix identity(std::size_t size);

    std::size_t size() const { return rows_.size(); }
    Rational at(std::size_t i, std::size_t j) const;
    /// Mutable access, lower triangle only (j <= i).
    Rational& entry(std::size_t i, std::size_t j);

    friend LowerTriMatrix operator*(const LowerTriMatrix& a, const LowerTriMatrix& b);
    friend bool operator==(const LowerTriMatrix& a, const LowerTriMatrix& b) {
        return a.rows_ == b.rows_;
    }
    friend bool operator!=(const LowerTriMatrix& a, const LowerTriMatrix& b) {
        return !(a == b);
    }

    Seq apply(const Seq& v) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    /// Forward substitution for T x = y; throws DomainError(SingularMatrix)
    /// on a zero diagonal entry.
    Seq solve(const Seq& y) const;
    LowerTriMatrix inverse() const;
    /// Product of the diagonal.
    Rational det() const;

private:
    std::vector<std::vector<Rational>> rows_;  // rows_[i] holds entries j = 0..i
};

/// M(a) with (M(a))_{ij} = C(i,j) a_{i-j}; realizes binomial convolution,
/// M(a) b = a * b and M(a) M(b) = M(a * b).
LowerTriMatrix conv_matrix(const Seq& a);

/// The creation matrix: subdiagonal entries N_{i,i-1} = i, zero elsewhere;
/// nilpotent of index n+1.
LowerTriMatrix creation_matrix(std::size_t n);

}  // namespace umbral
