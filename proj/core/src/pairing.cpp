#include "umbral/pairing.hpp"

#include <stdexcept>
#include <vector>

#include "umbral/binomial.hpp"
#include "umbral/curve.hpp"
#include "umbral/errors.hpp"

namespace umbral {

namespace {

void check_level(const Poly& p, std::size_t n, const DeltaOp& d) {
    if (n > d.level())
        throw DomainError("DegreeExceedsLevel", "pairing level exceeds operator level");
    if (!p.degree_at_most(n))
        throw DomainError("DegreeExceedsLevel", "operand degree exceeds pairing level");
}

}  // namespace

PairingReport polarity_pairing(const Poly& a, const Poly& b, const DeltaOp& d, std::size_t n) {
    check_level(a, n, d);
    check_level(b, n, d);
    const DeltaOp dstar = d.adjoint();

    std::vector<Poly> da(n + 1), dsb(n + 1);
    da[0] = a;
    dsb[0] = b;
    for (std::size_t k = 1; k <= n; ++k) {
        da[k] = d.apply(da[k - 1]);
        dsb[k] = dstar.apply(dsb[k - 1]);
    }

    Poly sum;
    for (std::size_t p = 0; p <= n; ++p) {
        Poly term = da[p] * dsb[n - p];
        sum = ((n - p) % 2 == 0) ? sum + term : sum - term;
    }

    PairingReport report;
    report.value = sum.coeff(0);
    report.residual = sum - Poly::constant(report.value);
    if (!report.residual.is_zero())
        throw DomainError("NonConstantPairing", "polarity pairing produced a nonconstant value");
    return report;
}

Poly umbral_add_convolve(const Poly& p, const Poly& q, const DeltaOp& d, std::size_t n) {
    check_level(p, n, d);
    check_level(q, n, d);
    Poly acc;
    Poly dq = q;  // iterated as d^{n-k} Q, k descending
    Poly dp = p;
    std::vector<Rational> dp0(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        dp0[k] = dp.eval(Rational(0));
        if (k < n) dp = d.apply(dp);
    }
    for (std::size_t k = n + 1; k-- > 0;) {
        if (!dp0[k].is_zero()) acc = acc + dq.scale(dp0[k]);
        if (k > 0) dq = d.apply(dq);
    }
    return acc.scale(factorial(n).inverse());
}

Poly add_conv_inverse(const Poly& p, const DeltaOp& d, std::size_t n) {
    check_level(p, n, d);
    if (p.is_zero() || p.degree() < n)
        throw DomainError("NotInvertiblePoly",
                          "only degree-n polynomials are invertible for [+]_n");
    const Poly target = binomial_curve(d, n).component(n);

    // P [+] t^j has degree j with a fixed leading factor, so eliminate the
    // remainder from the top degree down.
    const Rational diag = d.apply_iter(p, n).coeff(0) / factorial(n);
    Poly x;
    Poly rem = target;
    for (std::size_t j = n + 1; j-- > 0;) {
        Rational cj = rem.coeff(j) / diag;
        if (cj.is_zero()) continue;
        Poly basis = Poly::monomial(j, cj);
        x = x + basis;
        rem = rem - umbral_add_convolve(p, basis, d, n);
    }
    if (!rem.is_zero()) throw std::logic_error("additive inversion left a remainder");
    return x;
}

}  // namespace umbral
