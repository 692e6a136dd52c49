#include "umbral/wronskian.hpp"

#include <set>
#include <stdexcept>

#include "umbral/binomial.hpp"
#include "umbral/determinant.hpp"
#include "umbral/errors.hpp"
#include "umbral/pairing.hpp"

namespace umbral {

Poly WronskianForm::apply(const std::vector<Rational>& v) const {
    Poly acc;
    for (std::size_t k = 0; k < columns.size() && k < v.size(); ++k)
        acc = acc + columns[k].scale(v[k]);
    return acc;
}

Poly WronskianForm::apply(const Seq& v) const { return apply(v.entries()); }

WronskianForm umbral_wronskian(const Curve& theta, const DeltaOp& d) {
    const std::size_t n = theta.level();
    if (n > d.level())
        throw DomainError("DegreeExceedsLevel", "curve level exceeds operator level");
    const Curve eta = binomial_curve(d, n);
    // theta = T . eta, so T = T_e(theta) T_e(eta)^{-1}.
    const LowerTriMatrix t_inv = eta.matrix() * theta.matrix().inverse();

    WronskianForm w;
    w.level = n;
    w.columns.assign(n + 1, Poly());
    const Rational inv_nfact = factorial(n).inverse();
    for (std::size_t j = 0; j <= n; ++j) {
        Poly acc;
        for (std::size_t k = 0; k <= n; ++k) {
            const Rational c = binomial(n, k) * t_inv.at(n - k, j);
            if (!c.is_zero()) acc = acc + eta.component(k).scale(c);
        }
        w.columns[j] = acc.scale(inv_nfact);
    }
    return w;
}

Rational wronskian_det_ratio(const Curve& theta, const DeltaOp& d, const Rational& t,
                             const std::vector<Rational>& v) {
    const std::size_t n = theta.level();
    if (v.size() != n + 1)
        throw DomainError("LevelMismatch", "vector size must be curve level + 1");
    // Columns d^k theta(t), k = 0..n-1, then v (numerator) or d^n theta(t).
    std::vector<std::vector<Poly>> iterated(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        iterated[i].resize(n + 1);
        iterated[i][0] = theta.component(i);
        for (std::size_t k = 1; k <= n; ++k) iterated[i][k] = d.apply(iterated[i][k - 1]);
    }
    std::vector<std::vector<Rational>> num(n + 1, std::vector<Rational>(n + 1));
    std::vector<std::vector<Rational>> den(n + 1, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            num[i][k] = iterated[i][k].eval(t);
            den[i][k] = num[i][k];
        }
        num[i][n] = v[i];
        den[i][n] = iterated[i][n].eval(t);
    }
    return det_bareiss(num) / det_bareiss(den);
}

Curve dual_curve(const Curve& theta, const DeltaOp& d) {
    const std::size_t n = theta.level();
    const Curve eta = binomial_curve(d, n);
    // Matrix route over the eta basis: with theta = T . eta the dual is
    // (D^{-1} J T^{-T} J D) . eta, J the index reversal, D = diag C(n,k).
    const LowerTriMatrix t_inv = eta.matrix() * theta.matrix().inverse();
    std::vector<Poly> comps(n + 1);
    for (std::size_t l = 0; l <= n; ++l) {
        Poly acc;
        for (std::size_t k = 0; k <= n; ++k) {
            const Rational c = binomial(n, k) * t_inv.at(n - k, n - l) / binomial(n, l);
            if (!c.is_zero()) acc = acc + eta.component(k).scale(c);
        }
        comps[l] = acc;
    }
    Curve dual = Curve::from_components(std::move(comps));

    // Wronskian-definition route, Q_k = k!(n-k)! W(t, e_{n-k}).
    const WronskianForm w = umbral_wronskian(theta, d);
    for (std::size_t k = 0; k <= n; ++k)
        if (dual.component(k) != w.columns[n - k].scale(factorial(k) * factorial(n - k)))
            throw std::logic_error("dual-curve routes disagree");
    return dual;
}

bool duality_pairing_check(const Curve& theta, const DeltaOp& d) {
    const std::size_t n = theta.level();
    const Curve dual = dual_curve(theta, d);
    for (std::size_t a = 0; a <= n; ++a)
        for (std::size_t b = 0; b <= n; ++b) {
            const Rational expected =
                (a + b == n) ? factorial(a) * factorial(b) : Rational(0);
            const Rational got =
                polarity_pairing(theta.component(a), dual.component(b).reflect(), d, n).value;
            if (got != expected) return false;
        }
    return true;
}

Seq sheffer_dual(const Seq& v, const DeltaOp& d) {
    const std::size_t n = v.level();
    if (n > d.level())
        throw DomainError("DegreeExceedsLevel", "sequence level exceeds operator level");
    if (v.entry(0).is_zero())
        throw DomainError("NotInvertibleSeq", "Sheffer dual needs v_0 != 0");
    const Seq w = conv_invert(v);
    const Curve eta = binomial_curve(d, n);
    const Curve theta = sheffer_curve(v, eta);
    if (dual_curve(theta, d) != sheffer_curve(w, eta))
        throw std::logic_error("Sheffer dual is not the convolution inverse");

    // n! W(t, eta(s)) = dual_n(t+s); degree n in s, so n+2 samples pin it.
    const WronskianForm wr = umbral_wronskian(theta, d);
    const Poly dual_top = sheffer_curve(w, eta).component(n);
    for (long s = 0; s <= static_cast<long>(n) + 1; ++s) {
        const Poly lhs = wr.apply(eta.eval(Rational(s))).scale(factorial(n));
        if (lhs != dual_top.shift(Rational(s)))
            throw std::logic_error("Wronskian evaluation identity failed");
    }
    return w;
}

bool bistructure_wronskian_check(const DeltaOp& s, const DeltaOp& d, std::size_t n) {
    if (n > s.level() || n > d.level())
        throw DomainError("DegreeExceedsLevel", "level exceeds operator level");
    const Curve vartheta = binomial_curve(s, n);
    const Poly sn = binomial_curve(d, n).component(n);
    const WronskianForm w = umbral_wronskian(vartheta, d);
    for (std::size_t p = 0; p <= n; ++p) {
        const Poly expected =
            s.apply_iter(sn, p).scale((factorial(n) * factorial(p)).inverse());
        if (w.columns[p] != expected) return false;
    }
    const Curve dual = dual_curve(vartheta, d);
    for (std::size_t k = 0; k <= n; ++k) {
        const Poly expected = s.apply_iter(sn, n - k).scale(factorial(k) / factorial(n));
        if (dual.component(k) != expected) return false;
    }
    return true;
}

Poly appell_inverse_determinant(const Seq& a) {
    const std::size_t n = a.level();
    if (a.entry(0).is_zero())
        throw DomainError("NotInvertibleSeq", "inverse Appell needs a_0 != 0");
    // Bordered matrix: columns 0..n-1 of M(a), last column (1, t, ..., t^n).
    auto entry = [&](std::size_t i, std::size_t j) {
        return j <= i ? binomial(i, j) * a.entry(i - j) : Rational(0);
    };
    Poly result;
    for (std::size_t i = 0; i <= n; ++i) {
        std::vector<std::vector<Rational>> minor;
        minor.reserve(n);
        for (std::size_t r = 0; r <= n; ++r) {
            if (r == i) continue;
            std::vector<Rational> row(n);
            for (std::size_t c = 0; c < n; ++c) row[c] = entry(r, c);
            minor.push_back(std::move(row));
        }
        Rational cof = det_bareiss(minor);
        if ((i + n) % 2 == 1) cof = -cof;
        if (!cof.is_zero()) result = result + Poly::monomial(i, cof);
    }
    return result.scale(pow(a.entry(0), n + 1).inverse());
}

Rational vandermonde_general(const Curve& theta, const std::vector<Rational>& xs) {
    const std::size_t n = theta.level();
    if (xs.size() != n + 1)
        throw DomainError("RootCountMismatch", "needs exactly level + 1 evaluation points");
    std::vector<std::vector<Rational>> m(n + 1, std::vector<Rational>(n + 1));
    for (std::size_t j = 0; j <= n; ++j) {
        const std::vector<Rational> col = theta.eval(xs[j]);
        for (std::size_t i = 0; i <= n; ++i) m[i][j] = col[i];
    }
    const Rational det = det_bareiss(m);
    Rational expected = theta.volume();
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) expected *= xs[j] - xs[i];
    if (det != expected) throw std::logic_error("Vandermonde product formula failed");
    return det;
}

Rational vandermonde_shifted(const Curve& theta, const DeltaOp& d,
                             const std::vector<Rational>& roots, const Rational& t,
                             const Seq& v) {
    const std::size_t n = theta.level();
    if (roots.size() != n)
        throw DomainError("RootCountMismatch", "needs exactly level many roots");
    if (v.level() != n) throw DomainError("LevelMismatch", "vector level must match curve");
    const Poly sn = binomial_curve(d, n).component(n);
    std::set<std::string> seen;
    for (const Rational& r : roots) {
        if (!sn.eval(r).is_zero())
            throw DomainError("NotARoot", "supplied value is not a root of S_n");
        if (!seen.insert(r.str()).second)
            throw DomainError("RepeatedRoot", "repeated root; only simple roots are supported");
    }

    std::vector<std::vector<Rational>> m(n + 1, std::vector<Rational>(n + 1));
    for (std::size_t j = 0; j < n; ++j) {
        const std::vector<Rational> col = theta.eval(t + roots[j]);
        for (std::size_t i = 0; i <= n; ++i) m[i][j] = col[i];
    }
    for (std::size_t i = 0; i <= n; ++i) m[i][n] = v.entry(i);

    const Rational det = det_bareiss(m);
    Rational expected = theta.volume() * factorial(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) expected *= roots[j] - roots[i];
    expected *= umbral_wronskian(theta, d).apply(v).eval(-t);
    if (det != expected) throw std::logic_error("shifted Vandermonde identity failed");
    return det;
}

std::optional<std::vector<Rational>> known_binomial_roots(const DeltaOp& d, std::size_t n) {
    const std::string name = d.name();
    if (name == "forward_difference") {
        std::vector<Rational> roots;
        for (std::size_t k = 0; k < n; ++k) roots.emplace_back(static_cast<long>(k));
        return roots;
    }
    if (name.rfind("abel:a=", 0) == 0) {
        const Rational a = Rational::parse(name.substr(7));
        std::vector<Rational> roots;
        if (n >= 1) roots.emplace_back(0);
        for (std::size_t k = 1; k < n; ++k)
            roots.push_back(a * Rational(static_cast<long>(n)));
        return roots;
    }
    return std::nullopt;
}

bool devw_bridge_check(const Curve& theta, const DeltaOp& d) {
    const std::size_t n = theta.level();
    const DeltaOp der = DeltaOp::derivative(n == 0 ? 1 : n);
    const Poly sn = binomial_curve(d, n).component(n);
    const WronskianForm w_umbral = umbral_wronskian(theta, d);
    const WronskianForm w_classical = umbral_wronskian(theta, der);
    for (std::size_t k = 0; k <= n; ++k) {
        const Poly bridged = umbral_add_convolve(sn, w_classical.columns[k], der, n);
        if (w_umbral.columns[k] != bridged) return false;
    }
    return true;
}

}  // namespace umbral
