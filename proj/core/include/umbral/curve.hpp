#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "umbral/delta_op.hpp"
#include "umbral/poly.hpp"
#include "umbral/seq.hpp"
#include "umbral/tri_matrix.hpp"

namespace umbral {

/// Vandermonde curve of level n: components (P_0, ..., P_n) with
/// deg P_k = k exactly.  Equivalently the lower-triangular matrix T with
/// row k holding the coefficients of P_k, so that the curve is T times the
/// standard curve (1, t, ..., t^n).
class Curve {
public:
    /// Validates deg components[k] = k (DomainError(WrongDegree) otherwise).
    static Curve from_components(std::vector<Poly> components);
    static Curve from_matrix(const LowerTriMatrix& t);
    /// The standard curve e = (1, t, ..., t^n).
    static Curve standard(std::size_t level);

    std::size_t level() const { return components_.size() - 1; }
    const Poly& component(std::size_t k) const { return components_[k]; }
    const std::vector<Poly>& components() const { return components_; }

    /// Coefficient matrix T (row k = coefficients of P_k, padded).
    LowerTriMatrix matrix() const;
    /// Product of the leading coefficients, det T.
    Rational volume() const;
    /// Pointwise evaluation (P_0(t), ..., P_n(t)).
    std::vector<Rational> eval(const Rational& t) const;

    friend bool operator==(const Curve& a, const Curve& b) {
        return a.components_ == b.components_;
    }
    friend bool operator!=(const Curve& a, const Curve& b) { return !(a == b); }

private:
    std::vector<Poly> components_;
};

/// Delta operator on polynomials of degree <= level modulo n-th roots of
/// unity, represented by the a_1 = 1 class member.
struct UmbralStructure {
    std::size_t level;
    DeltaOp normalized_op;  // coeff(1) == 1
};

/// Binomial curve of d up to level n <= d.level(): S_0 = 1 and, for k >= 1,
/// d S_k = k S_{k-1} with S_k(0) = 0, solved coefficientwise from the top
/// degree down.
Curve binomial_curve(const DeltaOp& d, std::size_t n);
Curve binomial_curve(const DeltaOp& d);

/// Recovers the level-n umbral structure whose binomial curve has top term
/// proportional to S.  Requires deg S = n >= 1 and S(0) = 0
/// (DomainError(WrongDegree) / DomainError(ConstantTermNonzero)).
UmbralStructure delta_from_top(const Poly& s);

/// v * theta, componentwise binomial convolution: component m is
/// sum_k C(m,k) v_{m-k} P_k.  Requires v_0 != 0 and matching levels.
Curve sheffer_curve(const Seq& v, const Curve& theta);

/// Matrix of the lowering operator of theta in the monomial basis (row i =
/// coefficients of the image of t^i); conjugate of the creation matrix.
LowerTriMatrix curve_delta(const Curve& theta);

struct ShefferTest {
    bool sheffer = false;
    std::optional<DeltaOp> op;  // present when sheffer and level >= 1
};

/// Tests whether the lowering operator of theta is a delta operator, i.e.
/// its monomial matrix has the generalized-diagonal profile of a formal
/// operator sum a_k d^k/dt^k; recovers the coefficients when it does.
ShefferTest is_sheffer(const Curve& theta);

/// U_theta(a) = T M(e(a)) T^{-1}, satisfying theta(t+a) = U_theta(a) theta(t).
LowerTriMatrix translation_matrix(const Curve& theta, const Rational& a);

/// Umbral Taylor formula: P(t+a) = sum_k (d^k P)(t) S_k(a) / k!, returned
/// after checking the expansion against the direct shift.
Poly umbral_taylor(const Poly& p, const Rational& a, const DeltaOp& d);

}  // namespace umbral
