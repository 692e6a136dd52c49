#include "umbral/power_series.hpp"

#include <algorithm>

#include "umbral/errors.hpp"

namespace umbral {

PowerSeries PowerSeries::from_coeffs(std::vector<Rational> coeffs) {
    if (coeffs.empty()) throw DomainError("ParseError", "power series needs a constant term");
    PowerSeries f(coeffs.size() - 1);
    f.coeffs_ = std::move(coeffs);
    return f;
}

PowerSeries PowerSeries::truncated(std::size_t new_order) const {
    PowerSeries f(new_order);
    for (std::size_t k = 0; k <= std::min(new_order, order()); ++k) f.coeffs_[k] = coeffs_[k];
    return f;
}

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
    std::size_t n = std::min(f.order(), g.order());
    PowerSeries h(n);
    for (std::size_t k = 0; k <= n; ++k) h.coeffs_[k] = f.coeffs_[k] + g.coeffs_[k];
    return h;
}

PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) {
    std::size_t n = std::min(f.order(), g.order());
    PowerSeries h(n);
    for (std::size_t k = 0; k <= n; ++k) h.coeffs_[k] = f.coeffs_[k] - g.coeffs_[k];
    return h;
}

PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
    std::size_t n = std::min(f.order(), g.order());
    PowerSeries h(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (f.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n; ++j) h.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
    return h;
}

PowerSeries PowerSeries::scale(const Rational& c) const {
    PowerSeries h(order());
    for (std::size_t k = 0; k <= order(); ++k) h.coeffs_[k] = coeffs_[k] * c;
    return h;
}

PowerSeries PowerSeries::reciprocal() const {
    if (coeffs_[0].is_zero())
        throw DomainError("NonUnitSeries", "reciprocal needs a nonzero constant term");
    PowerSeries g(order());
    g.coeffs_[0] = coeffs_[0].inverse();
    for (std::size_t k = 1; k <= order(); ++k) {
        Rational acc(0);
        for (std::size_t i = 1; i <= k; ++i) acc += coeffs_[i] * g.coeffs_[k - i];
        g.coeffs_[k] = -acc / coeffs_[0];
    }
    return g;
}

PowerSeries PowerSeries::derivative() const {
    if (order() == 0) return PowerSeries(0);
    PowerSeries g(order() - 1);
    for (std::size_t k = 1; k <= order(); ++k)
        g.coeffs_[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    return g;
}

PowerSeries PowerSeries::compose(const PowerSeries& f, const PowerSeries& g) {
    if (!g.coeffs_[0].is_zero())
        throw DomainError("NotInvertibleSeries", "composition needs g(0) = 0");
    std::size_t n = std::min(f.order(), g.order());
    PowerSeries acc(n);
    for (std::size_t k = f.order() + 1; k-- > 0;) {
        acc = acc * g.truncated(n);
        acc.coeffs_[0] += f.coeffs_[k];
    }
    return acc;
}

PowerSeries PowerSeries::compositional_inverse() const {
    if (order() < 1 || !coeffs_[0].is_zero() || coeffs_[1].is_zero())
        throw DomainError("NotInvertibleSeries",
                          "compositional inverse needs phi(0) = 0 and phi'(0) != 0");
    PowerSeries psi(order());
    psi.coeffs_[1] = coeffs_[1].inverse();
    for (std::size_t m = 2; m <= order(); ++m) {
        // With psi known below order m, [z^m] phi(psi) is affine in psi_m
        // with slope phi_1 (psi_m can only pair with z^0 factors, all zero).
        Rational c = compose(*this, psi).coeff(m);
        psi.coeffs_[m] = -c / coeffs_[1];
    }
    return psi;
}

PowerSeries PowerSeries::z_dlog() const {
    if (order() < 1 || !coeffs_[0].is_zero() || coeffs_[1].is_zero())
        throw DomainError("NotInvertibleSeries", "z_dlog needs phi(0) = 0 and phi'(0) != 0");
    // z phi'/phi = phi' / (phi/z); the shifted-down series is a unit.
    PowerSeries shifted(order() - 1);
    for (std::size_t k = 1; k <= order(); ++k) shifted.coeffs_[k - 1] = coeffs_[k];
    return derivative() * shifted.reciprocal();
}

}  // namespace umbral
