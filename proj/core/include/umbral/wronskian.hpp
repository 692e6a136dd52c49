#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "umbral/curve.hpp"
#include "umbral/delta_op.hpp"
#include "umbral/poly.hpp"
#include "umbral/seq.hpp"

namespace umbral {

/// Umbral Wronskian of a curve as a form in (t, v): W(t, v) is linear in v
/// with polynomial coefficients, W(t, v) = sum_k columns[k](t) v_k.
struct WronskianForm {
    std::size_t level = 0;
    std::vector<Poly> columns;

    Poly apply(const std::vector<Rational>& v) const;
    Poly apply(const Seq& v) const;
};

/// Closed form of the umbral Wronskian: with theta = T . eta over the
/// binomial curve eta of d, W(t, v) = (1/n!) sum_k C(n,k) (T^{-1} v)_{n-k}
/// S_k(t).  Requires theta.level() <= d.level().
WronskianForm umbral_wronskian(const Curve& theta, const DeltaOp& d);

/// Cross-check route for the Wronskian at a rational point: the determinant
/// ratio det(theta(t), d theta(t), ..., d^{n-1} theta(t), v) /
/// det(theta(t), ..., d^n theta(t)), which equals W(-t, v).
Rational wronskian_det_ratio(const Curve& theta, const DeltaOp& d, const Rational& t,
                             const std::vector<Rational>& v);

/// Dual curve with components Q_k = k! (n-k)! W(t, e_{n-k}); computed from
/// the matrix form over the binomial basis and checked against the
/// Wronskian definition.  An involution.
Curve dual_curve(const Curve& theta, const DeltaOp& d);

/// Biorthogonality grid <P_a, Q_b(-t)>_n = a! b! delta_{a+b,n} for the dual
/// pair, all 0 <= a, b <= n, exactly.
bool duality_pairing_check(const Curve& theta, const DeltaOp& d);

/// Dual of the Sheffer curve v * eta is (v^{-1}) * eta; returns v^{-1}
/// after checking the curve-level statement and the top-component identity
/// n! W(t, eta(s)) = dual_n(t + s).
Seq sheffer_dual(const Seq& v, const DeltaOp& d);

/// Wronskian of the binomial curve of s with respect to d:
/// W(t, v) = (1/n!) sum_p (s^p S_n)(t) v_p / p!, with S_n taken from d;
/// dual components s^{n-k} S_n . k!/n!.  Verified exactly.
bool bistructure_wronskian_check(const DeltaOp& s, const DeltaOp& d, std::size_t n);

/// Inverse Appell polynomial B_n as the bordered determinant over a_0^{n+1}
/// (cofactor expansion along the power column).  Equals component n of
/// sheffer_curve(conv_invert(a), e).
Poly appell_inverse_determinant(const Seq& a);

/// det(theta(x_0), ..., theta(x_n)), checked against the product formula
/// vol(theta) prod_{i<j} (x_j - x_i).  Requires exactly n+1 points.
Rational vandermonde_general(const Curve& theta, const std::vector<Rational>& xs);

/// det(theta(t+a_1), ..., theta(t+a_n), v) for the roots a_i of S_n,
/// checked against vol(theta) prod_{i<j}(a_j - a_i) . n! W(-t, v).
/// The roots are caller-supplied, must be simple, and each must satisfy
/// S_n(a_i) = 0.
Rational vandermonde_shifted(const Curve& theta, const DeltaOp& d,
                             const std::vector<Rational>& roots, const Rational& t,
                             const Seq& v);

/// Rational roots of the level-n binomial component, where the library
/// knows them: 0..n-1 for the forward difference, {0, a n (repeated)} for
/// abel:a.  Empty when unknown.
std::optional<std::vector<Rational>> known_binomial_roots(const DeltaOp& d, std::size_t n);

/// Columnwise check of the bridge W^d(t, v) = S_n(t) [+]_n W(t, v) between
/// the umbral and classical Wronskians.
bool devw_bridge_check(const Curve& theta, const DeltaOp& d);

}  // namespace umbral
