#include "umbral/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "umbral/errors.hpp"

namespace umbral {

ComplexPoly ComplexPoly::from_poly(const Poly& p) {
    ComplexPoly cp;
    cp.coeffs.reserve(p.coeffs().size());
    for (const Rational& c : p.coeffs()) cp.coeffs.emplace_back(c.to_double(), 0.0);
    return cp;
}

std::complex<double> ComplexPoly::eval(const std::complex<double>& z) const {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
}

std::complex<double> ComplexPoly::eval_derivative(const std::complex<double>& z) const {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = coeffs.size(); i-- > 1;)
        acc = acc * z + coeffs[i] * static_cast<double>(i);
    return acc;
}

std::vector<std::complex<double>> poly_roots(const ComplexPoly& p, double tol, int max_iter) {
    if (p.coeffs.size() < 2)
        throw std::invalid_argument("root finding needs degree >= 1");
    if (std::abs(p.coeffs.back()) == 0.0)
        throw std::invalid_argument("zero leading coefficient");

    const std::size_t n = p.degree();
    ComplexPoly q = p;
    const std::complex<double> lead = q.coeffs.back();
    for (auto& c : q.coeffs) c /= lead;

    double max_mod = 0.0;
    for (std::size_t k = 0; k < n; ++k) max_mod = std::max(max_mod, std::abs(q.coeffs[k]));
    const double radius = 1.0 + max_mod;

    constexpr double golden_angle = 2.399963229728653;
    std::vector<std::complex<double>> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double angle = 0.5 + golden_angle * static_cast<double>(i);
        z[i] = radius * std::complex<double>(std::cos(angle), std::sin(angle));
    }

    constexpr double eps = 2.220446049250313e-16;
    for (int iter = 0; iter < max_iter; ++iter) {
        bool converged = true;
        for (std::size_t i = 0; i < n; ++i) {
            // Horner value together with the evaluation-noise scale
            // sum |a_k| |z|^k; once |p(z)| sits below that floor the root
            // cannot be improved in double precision.
            std::complex<double> pv(0.0, 0.0);
            double scale = 0.0;
            const double zmod = std::abs(z[i]);
            for (std::size_t k = q.coeffs.size(); k-- > 0;) {
                pv = pv * z[i] + q.coeffs[k];
                scale = scale * zmod + std::abs(q.coeffs[k]);
            }
            if (std::abs(pv) <= 4.0 * eps * scale) continue;

            std::complex<double> dv = q.eval_derivative(z[i]);
            if (std::abs(dv) == 0.0) dv = std::complex<double>(eps, eps);
            const std::complex<double> newton = pv / dv;
            std::complex<double> repulsion(0.0, 0.0);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                repulsion += 1.0 / (z[i] - z[j]);
            }
            const std::complex<double> denom = 1.0 - newton * repulsion;
            const std::complex<double> w =
                (std::abs(denom) == 0.0) ? newton : newton / denom;
            z[i] -= w;
            if (std::abs(w) > tol * (1.0 + std::abs(z[i]))) converged = false;
        }
        if (converged) return z;
    }

    std::vector<double> residuals(n);
    for (std::size_t i = 0; i < n; ++i) residuals[i] = std::abs(q.eval(z[i]));
    throw NoConvergence(max_iter, std::move(residuals));
}

Strip root_strip(const ComplexPoly& p, double tol) {
    const auto roots = poly_roots(p, tol);
    Strip s{roots[0].real(), roots[0].real()};
    for (const auto& r : roots) {
        s.lo = std::min(s.lo, r.real());
        s.hi = std::max(s.hi, r.real());
    }
    return s;
}

}  // namespace umbral
