#include "umbral/curve.hpp"

#include <stdexcept>

#include "umbral/binomial.hpp"
#include "umbral/errors.hpp"

namespace umbral {

Curve Curve::from_components(std::vector<Poly> components) {
    if (components.empty())
        throw DomainError("WrongDegree", "curve needs at least one component");
    for (std::size_t k = 0; k < components.size(); ++k) {
        const Poly& p = components[k];
        if (p.is_zero() || p.degree() != k)
            throw DomainError("WrongDegree",
                              "curve component " + std::to_string(k) + " must have degree " +
                                  std::to_string(k));
    }
    Curve c;
    c.components_ = std::move(components);
    return c;
}

Curve Curve::from_matrix(const LowerTriMatrix& t) {
    std::vector<Poly> comps;
    comps.reserve(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) {
        std::vector<Rational> cs(k + 1);
        for (std::size_t j = 0; j <= k; ++j) cs[j] = t.at(k, j);
        comps.emplace_back(std::move(cs));
    }
    return from_components(std::move(comps));
}

Curve Curve::standard(std::size_t level) {
    std::vector<Poly> comps;
    comps.reserve(level + 1);
    for (std::size_t k = 0; k <= level; ++k) comps.push_back(Poly::monomial(k));
    return from_components(std::move(comps));
}

LowerTriMatrix Curve::matrix() const {
    LowerTriMatrix t(level() + 1);
    for (std::size_t k = 0; k <= level(); ++k)
        for (std::size_t j = 0; j <= k; ++j) t.entry(k, j) = components_[k].coeff(j);
    return t;
}

Rational Curve::volume() const {
    Rational v(1);
    for (const Poly& p : components_) v *= p.leading();
    return v;
}

std::vector<Rational> Curve::eval(const Rational& t) const {
    std::vector<Rational> out;
    out.reserve(components_.size());
    for (const Poly& p : components_) out.push_back(p.eval(t));
    return out;
}

Curve binomial_curve(const DeltaOp& d, std::size_t n) {
    if (n > d.level())
        throw DomainError("DegreeExceedsLevel", "curve level exceeds operator level");
    std::vector<Poly> comps;
    comps.reserve(n + 1);
    comps.push_back(Poly::constant(1));
    for (std::size_t k = 1; k <= n; ++k) {
        const Poly& prev = comps[k - 1];
        // Coefficients of S_k, solved for j = k down to 1; the constant is
        // pinned to 0 by S_k(0) = 0.
        std::vector<Rational> c(k + 1, Rational(0));
        for (std::size_t j = k; j >= 1; --j) {
            // [t^{j-1}] d S_k = k [t^{j-1}] S_{k-1}
            Rational acc(0);
            for (std::size_t m = 2; j - 1 + m <= k && m <= d.level(); ++m)
                acc += d.coeff(m) * c[j - 1 + m] * falling(j - 1 + m, m);
            Rational rhs = Rational(static_cast<long>(k)) * prev.coeff(j - 1);
            c[j] = (rhs - acc) / (d.coeff(1) * Rational(static_cast<long>(j)));
        }
        comps.emplace_back(std::move(c));
    }
    return Curve::from_components(std::move(comps));
}

Curve binomial_curve(const DeltaOp& d) { return binomial_curve(d, d.level()); }

UmbralStructure delta_from_top(const Poly& s) {
    if (s.is_zero() || s.degree() < 1)
        throw DomainError("WrongDegree", "top term must have degree >= 1");
    if (!s.coeff(0).is_zero())
        throw DomainError("ConstantTermNonzero", "top term of a binomial curve vanishes at 0");
    const std::size_t n = s.degree();
    Poly monic = s.scale(s.leading().inverse());

    std::vector<Rational> lambda(n, Rational(0));
    lambda[0] = Rational(1);
    // (d^j S)(0) = 0 for j = n-1 .. 1; the j-th equation is affine in
    // lambda_{n-j+1}, so probe at 0 and 1 and solve.
    for (std::size_t j = n - 1; j >= 1; --j) {
        std::size_t idx = n - j + 1;
        auto value_at = [&](const Rational& guess) {
            lambda[idx - 1] = guess;
            return DeltaOp::from_coeffs(lambda).apply_iter(monic, j).eval(Rational(0));
        };
        Rational f0 = value_at(Rational(0));
        Rational f1 = value_at(Rational(1));
        Rational slope = f1 - f0;
        if (slope.is_zero()) throw std::logic_error("degenerate umbral recovery system");
        lambda[idx - 1] = -f0 / slope;
    }
    return UmbralStructure{n, DeltaOp::from_coeffs(std::move(lambda))};
}

Curve sheffer_curve(const Seq& v, const Curve& theta) {
    if (v.level() != theta.level())
        throw DomainError("LevelMismatch", "sequence and curve levels differ");
    if (v.entry(0).is_zero())
        throw DomainError("NotInvertibleSeq", "Sheffer transform needs v_0 != 0");
    std::vector<Poly> comps;
    comps.reserve(theta.level() + 1);
    for (std::size_t m = 0; m <= theta.level(); ++m) {
        Poly acc;
        for (std::size_t k = 0; k <= m; ++k)
            acc = acc + theta.component(k).scale(binomial(m, k) * v.entry(m - k));
        comps.push_back(acc);
    }
    return Curve::from_components(std::move(comps));
}

LowerTriMatrix curve_delta(const Curve& theta) {
    const LowerTriMatrix t = theta.matrix();
    return t.inverse() * creation_matrix(theta.level()) * t;
}

ShefferTest is_sheffer(const Curve& theta) {
    const std::size_t n = theta.level();
    if (n == 0) return {true, std::nullopt};
    LowerTriMatrix a = curve_delta(theta);
    std::vector<Rational> coeffs(n);
    for (std::size_t m = 1; m <= n; ++m) coeffs[m - 1] = a.at(m, 0) / factorial(m);
    for (std::size_t m = 1; m <= n; ++m)
        for (std::size_t i = m; i <= n; ++i)
            if (a.at(i, i - m) != coeffs[m - 1] * falling(i, m)) return {false, std::nullopt};
    return {true, DeltaOp::from_coeffs(std::move(coeffs))};
}

LowerTriMatrix translation_matrix(const Curve& theta, const Rational& a) {
    const LowerTriMatrix t = theta.matrix();
    return t * conv_matrix(Seq::powers(theta.level(), a)) * t.inverse();
}

Poly umbral_taylor(const Poly& p, const Rational& a, const DeltaOp& d) {
    if (!p.degree_at_most(d.level()))
        throw DomainError("DegreeExceedsLevel", "polynomial degree exceeds operator level");
    const Curve eta = binomial_curve(d);
    Poly acc;
    Poly dp = p;
    for (std::size_t k = 0; k <= d.level(); ++k) {
        if (k > 0) dp = d.apply(dp);
        if (dp.is_zero()) break;
        acc = acc + dp.scale(eta.component(k).eval(a) / factorial(k));
    }
    if (acc != p.shift(a)) throw std::logic_error("umbral Taylor expansion mismatch");
    return acc;
}

}  // namespace umbral
