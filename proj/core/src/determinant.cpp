#include "umbral/determinant.hpp"

#include <cstddef>

#include "umbral/errors.hpp"

namespace umbral {

Rational det_bareiss(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Rational(1);
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("LevelMismatch", "determinant of non-square matrix");

    // Clear denominators row by row; track the combined scale factor.
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_class den = m[i][j].denominator();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
            l = l / g * den;
        }
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class q = m[i][j].raw() * l;
            a[i][j] = q.get_num();  // exact: l kills the denominator
        }
        scale *= l;
    }

    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a[k][k]) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(a[p][k]) == 0) ++p;
            if (p == n) return Rational(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    mpq_class d(a[n - 1][n - 1] * sign, scale);
    d.canonicalize();
    return Rational(d);
}

}  // namespace umbral
