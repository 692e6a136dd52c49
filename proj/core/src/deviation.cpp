#include "umbral/deviation.hpp"

#include <stdexcept>

#include "umbral/binomial.hpp"
#include "umbral/curve.hpp"
#include "umbral/errors.hpp"
#include "umbral/power_series.hpp"

namespace umbral {

Poly deviation_poly(const DeltaOp& d, std::size_t n) {
    const Poly sn = binomial_curve(d, n).component(n);
    return add_conv_inverse(sn, DeltaOp::derivative(n), n);
}

Rational deviation_via_pairing(const DeltaOp& d, std::size_t n, const Rational& alpha) {
    const Poly tn = Poly::monomial(n);
    const Poly shifted = Poly({alpha, Rational(-1)}).pow(n);  // (alpha - t)^n
    return polarity_pairing(tn, shifted, d, n).value / factorial(n);
}

bool deviation_recurrence_check(const DeltaOp& d, std::size_t n) {
    if (n < 2 || n > d.level())
        throw DomainError("DegreeExceedsLevel", "recurrence check needs 2 <= n <= level");
    const Poly lhs = deviation_poly(d, n).derivative();
    const Poly rhs = umbral_add_convolve(deviation_poly(d, n - 1), d.apply(Poly::monomial(n)),
                                         DeltaOp::derivative(n - 1), n - 1);
    return lhs == rhs;
}

std::vector<Poly> appell_from_structure(const DeltaOp& d, std::size_t order) {
    if (order > d.level())
        throw DomainError("DegreeExceedsLevel", "Appell order exceeds operator level");
    const PowerSeries g = d.phi(order + 1).z_dlog().reciprocal();

    std::vector<Rational> a0(order + 1);  // a_k = A_k(0) = k! [z^k] g
    for (std::size_t k = 0; k <= order; ++k) a0[k] = factorial(k) * g.coeff(k);

    std::vector<Poly> appell;
    appell.reserve(order + 1);
    for (std::size_t m = 0; m <= order; ++m) {
        Poly am;
        for (std::size_t k = 0; k <= m; ++k)
            am = am + Poly::monomial(m - k, binomial(m, k) * a0[k]);
        appell.push_back(am);
    }
    for (std::size_t m = 1; m <= order; ++m)
        if (appell[m].derivative() != appell[m - 1].scale(Rational(static_cast<long>(m))))
            throw std::logic_error("Appell property failed");
    return appell;
}

Poly deviation_via_appell(const DeltaOp& d, std::size_t n) {
    const DeltaOp ext = d.level() > n ? d : d.resized(n + 1);
    Poly r = appell_from_structure(d, n)[n];
    for (std::size_t i = 0; i < n; ++i) r = ext.apply(r.antiderivative());
    return r;
}

Poly deviation_closed_delta(std::size_t n) {
    if (n == 0) return Poly::constant(1);
    const Poly t_high = Poly::monomial(2 * n + 1);
    Poly r = t_high - t_high.shift(Rational(-1));  // backward difference
    for (std::size_t i = 0; i < n; ++i) r = r.shift(Rational(1)) - r;
    return r.scale(factorial(n) / factorial(2 * n + 1));
}

bool umbral_vs_classical_bridge(const Poly& p, const Poly& q, const DeltaOp& d, std::size_t n) {
    const DeltaOp der = DeltaOp::derivative(n);
    const Poly rn = deviation_poly(d, n);

    const Rational umbral_value = polarity_pairing(p, q, d, n).value;
    const Rational via_left = polarity_pairing(umbral_add_convolve(rn, p, der, n), q, der, n).value;
    Rational via_right =
        polarity_pairing(p, umbral_add_convolve(rn.reflect(), q, der, n), der, n).value;
    if (n % 2 == 1) via_right = -via_right;
    if (umbral_value != via_left || umbral_value != via_right) return false;

    const Poly conv_umbral = umbral_add_convolve(p, q, d, n);
    const Poly conv_classical =
        umbral_add_convolve(umbral_add_convolve(rn, p, der, n), q, der, n);
    return conv_umbral == conv_classical;
}

}  // namespace umbral
