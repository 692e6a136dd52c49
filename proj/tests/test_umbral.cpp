#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "umbral/binomial.hpp"
#include "umbral/curve.hpp"
#include "umbral/delta_op.hpp"
#include "umbral/errors.hpp"

using namespace umbral;
using namespace umbral::testing;

namespace {

// S_k(x+y) = sum_j C(k,j) S_j(x) S_{k-j}(y) as a bivariate identity; both
// sides expanded into an x^i y^j coefficient grid.
bool binomial_identity_holds(const Curve& eta) {
    const std::size_t n = eta.level();
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<std::vector<Rational>> lhs(k + 1, std::vector<Rational>(k + 1, Rational(0)));
        std::vector<std::vector<Rational>> rhs = lhs;
        const Poly& sk = eta.component(k);
        for (std::size_t d = 0; d <= k; ++d) {
            const Rational c = sk.coeff(d);
            if (c.is_zero()) continue;
            for (std::size_t i = 0; i <= d; ++i) lhs[i][d - i] += c * binomial(d, i);
        }
        for (std::size_t j = 0; j <= k; ++j) {
            const Poly& sj = eta.component(j);
            const Poly& skj = eta.component(k - j);
            const Rational b = binomial(k, j);
            for (std::size_t p = 0; p <= j; ++p)
                for (std::size_t q = 0; q <= k - j; ++q)
                    rhs[p][q] += b * sj.coeff(p) * skj.coeff(q);
        }
        if (lhs != rhs) return false;
    }
    return true;
}

// Stirling numbers of the second kind via the standard recurrence.
Rational stirling2(std::size_t n, std::size_t k) {
    if (n == 0 && k == 0) return Rational(1);
    if (n == 0 || k == 0 || k > n) return Rational(0);
    return Rational(static_cast<long>(k)) * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

}  // namespace

TEST_CASE("delta operator application") {
    const DeltaOp delta = DeltaOp::forward_difference(4);
    CHECK(delta.apply(Poly::monomial(2)) == Poly({Rational(1), Rational(2)}));
    CHECK(delta.apply(Poly::constant(5)).is_zero());
    CHECK(DeltaOp::derivative(4).apply(Poly::monomial(3)) == Poly::monomial(2, Rational(3)));
    CHECK_THROWS_AS(DeltaOp::derivative(2).apply(Poly::monomial(3)), DomainError);

    // forward difference really is P(t+1) - P(t) at its level
    std::mt19937_64 rng(2);
    for (int rep = 0; rep < 10; ++rep) {
        const Poly p = random_poly(rng, 4);
        CHECK(delta.apply(p) == p.shift(Rational(1)) - p);
    }
}

TEST_CASE("adjoint operator") {
    CHECK(DeltaOp::derivative(3).adjoint() == DeltaOp::derivative(3));
    CHECK(DeltaOp::forward_difference(5).adjoint() == DeltaOp::backward_difference(5));
    CHECK(DeltaOp::abel(4, Rational(2)).adjoint() == DeltaOp::abel(4, Rational(-2)));

    // backward difference is P(t) - P(t-1)
    const DeltaOp lambda = DeltaOp::backward_difference(4);
    std::mt19937_64 rng(4);
    for (int rep = 0; rep < 10; ++rep) {
        const Poly p = random_poly(rng, 4);
        CHECK(lambda.apply(p) == p - p.shift(Rational(-1)));
        const DeltaOp d = random_normalized_delta(rng, 5);
        CHECK(d.adjoint().adjoint() == d);
    }
}

TEST_CASE("binomial curves of the named operators") {
    CHECK(binomial_curve(DeltaOp::derivative(5)) == Curve::standard(5));

    const Curve falling = binomial_curve(DeltaOp::forward_difference(5));
    for (std::size_t k = 0; k <= 5; ++k) CHECK(falling.component(k) == falling_factorial_poly(k));
    CHECK(falling.component(3) == Poly({Rational(0), Rational(2), Rational(-3), Rational(1)}));

    const Curve rising = binomial_curve(DeltaOp::backward_difference(5));
    for (std::size_t k = 0; k <= 5; ++k) CHECK(rising.component(k) == rising_factorial_poly(k));

    // d = d/dt + alpha d^2/dt^2 at level 2: S_2 = t^2 - 2 alpha t
    std::mt19937_64 rng(6);
    const Rational alpha = random_nonzero_rational(rng);
    const Curve quad = binomial_curve(DeltaOp::from_coeffs({Rational(1), alpha}));
    CHECK(quad.component(2) == Poly({Rational(0), Rational(-2) * alpha, Rational(1)}));

    // Abel curve: S_k(t) = t (t - k a)^{k-1}
    const Rational a(1);
    const Curve abel = binomial_curve(DeltaOp::abel(5, a));
    for (std::size_t k = 1; k <= 5; ++k) {
        const Poly expected =
            Poly::variable() *
            Poly({-a * Rational(static_cast<long>(k)), Rational(1)}).pow(k - 1);
        CHECK(abel.component(k) == expected);
    }

    // Touchard curve: S_n = sum_k S(n,k) t^k
    const Curve touchard = binomial_curve(DeltaOp::touchard(6));
    for (std::size_t n = 0; n <= 6; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(touchard.component(n).coeff(k) == stirling2(n, k));
}

TEST_CASE("binomial identity for all named operators") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const DeltaOp& d : named_operators(n)) {
            CAPTURE(d.name());
            CHECK(binomial_identity_holds(binomial_curve(d)));
        }
}

TEST_CASE("structure recovery from the top term") {
    CHECK(delta_from_top(Poly::monomial(4)).normalized_op == DeltaOp::derivative(4));

    const UmbralStructure delta3 = delta_from_top(falling_factorial_poly(3));
    CHECK(delta3.normalized_op.coeff(2) == Rational(1, 2));
    CHECK(delta3.normalized_op.coeff(3) == Rational(1, 6));

    // S = t^3 + a t^2 + b t gives lambda_2 = -a/6, lambda_3 = (a^2 - 3b)/18
    std::mt19937_64 rng(8);
    for (int rep = 0; rep < 10; ++rep) {
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        const UmbralStructure u = delta_from_top(Poly({Rational(0), b, a, Rational(1)}));
        CHECK(u.normalized_op.coeff(2) == -a / Rational(6));
        CHECK(u.normalized_op.coeff(3) == (a * a - Rational(3) * b) / Rational(18));
    }

    CHECK_THROWS_AS(delta_from_top(Poly({Rational(1), Rational(1)})), DomainError);
    CHECK_THROWS_AS(delta_from_top(Poly::constant(3)), DomainError);
}

TEST_CASE("structure round trip") {
    std::mt19937_64 rng(10);
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t n = 1 + rng() % 6;
        const DeltaOp d = random_normalized_delta(rng, n);
        const Poly top = binomial_curve(d).component(n);
        CHECK(delta_from_top(top).normalized_op == d);
        CHECK(binomial_curve(delta_from_top(top).normalized_op).component(n) == top);
    }
}

TEST_CASE("Sheffer curves") {
    const Curve eta = binomial_curve(DeltaOp::forward_difference(4));
    CHECK(sheffer_curve(Seq::unit(4), eta) == eta);

    // v_k = 1/(k+1) over the standard curve gives the Appell family
    // (forward difference of t^{k+1})/(k+1)
    std::vector<Rational> v(5);
    for (std::size_t k = 0; k <= 4; ++k) v[k] = Rational(1, static_cast<long>(k + 1));
    const Curve appell = sheffer_curve(Seq::from_entries(v), Curve::standard(4));
    for (std::size_t k = 0; k <= 4; ++k) {
        const Poly tk1 = Poly::monomial(k + 1);
        const Poly expected =
            (tk1.shift(Rational(1)) - tk1).scale(Rational(1, static_cast<long>(k + 1)));
        CHECK(appell.component(k) == expected);
    }
    CHECK(appell.component(2) == Poly({Rational(1, 3), Rational(1), Rational(1)}));

    CHECK_THROWS_AS(sheffer_curve(Seq(4), eta), DomainError);

    // the attached lowering operator is unchanged by the transform
    std::mt19937_64 rng(12);
    for (int rep = 0; rep < 15; ++rep) {
        const std::size_t n = 1 + rng() % 6;
        const DeltaOp d = random_normalized_delta(rng, n);
        const Curve base = binomial_curve(d);
        const Seq w = random_invertible_seq(rng, n);
        CHECK(curve_delta(sheffer_curve(w, base)) == curve_delta(base));
    }
}

TEST_CASE("lowering operator matrix") {
    CHECK(curve_delta(Curve::standard(4)) == creation_matrix(4));

    // falling factorials conjugate to the forward difference matrix
    const Curve falling = binomial_curve(DeltaOp::forward_difference(4));
    const LowerTriMatrix m = curve_delta(falling);
    const DeltaOp delta = DeltaOp::forward_difference(4);
    for (std::size_t i = 0; i <= 4; ++i) {
        const Poly image = delta.apply(Poly::monomial(i));
        for (std::size_t j = 0; j <= i; ++j) CHECK(m.at(i, j) == image.coeff(j));
    }
}

TEST_CASE("Sheffer test") {
    const ShefferTest standard = is_sheffer(Curve::standard(3));
    CHECK(standard.sheffer);
    CHECK(*standard.op == DeltaOp::derivative(3));

    // shifted powers (1, t+c, (t+c)^2, ...) are Appell
    const Rational c(7, 3);
    std::vector<Poly> shifted;
    for (std::size_t k = 0; k <= 3; ++k) shifted.push_back(Poly({c, Rational(1)}).pow(k));
    const ShefferTest sh = is_sheffer(Curve::from_components(shifted));
    CHECK(sh.sheffer);
    CHECK(*sh.op == DeltaOp::derivative(3));

    const ShefferTest appell = is_sheffer(Curve::from_components(
        {Poly::constant(1), Poly::variable(), Poly({Rational(1), Rational(0), Rational(1)})}));
    CHECK(appell.sheffer);
    CHECK(*appell.op == DeltaOp::derivative(2));

    // at level 2 a lone shifted P_1 still fits a formal operator ...
    const ShefferTest low = is_sheffer(Curve::from_components(
        {Poly::constant(1), Poly({Rational(5), Rational(1)}), Poly::monomial(2)}));
    CHECK(low.sheffer);
    CHECK(*low.op == DeltaOp::from_coeffs({Rational(1), Rational(5)}));

    // ... but with t^3 present the diagonal profile breaks: not Sheffer
    const ShefferTest bad = is_sheffer(
        Curve::from_components({Poly::constant(1), Poly({Rational(5), Rational(1)}),
                                Poly::monomial(2), Poly::monomial(3)}));
    CHECK_FALSE(bad.sheffer);

    for (std::size_t n = 1; n <= 5; ++n)
        for (const DeltaOp& d : named_operators(n)) {
            const ShefferTest t = is_sheffer(binomial_curve(d));
            CHECK(t.sheffer);
            CHECK(*t.op == d);
        }
}

TEST_CASE("translation matrices") {
    const Curve falling = binomial_curve(DeltaOp::forward_difference(3));
    CHECK(translation_matrix(falling, Rational(0)) == LowerTriMatrix::identity(4));

    CHECK(translation_matrix(Curve::standard(3), Rational(1)) ==
          conv_matrix(Seq::powers(3, Rational(1))));

    // the Sheffer identity U(a) = M(eta(a)): falling factorials at 1 give
    // (1, 1, 0, 0)
    CHECK(translation_matrix(falling, Rational(1)) ==
          conv_matrix(Seq::from_entries({Rational(1), Rational(1), Rational(0), Rational(0)})));

    std::mt19937_64 rng(14);
    for (int rep = 0; rep < 10; ++rep) {
        const Curve theta = random_curve(rng, 1 + rng() % 5);
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        CHECK(translation_matrix(theta, a) * translation_matrix(theta, b) ==
              translation_matrix(theta, a + b));

        // theta(t+a) = U(a) theta(t) componentwise
        const LowerTriMatrix u = translation_matrix(theta, a);
        for (std::size_t i = 0; i <= theta.level(); ++i) {
            Poly acc;
            for (std::size_t j = 0; j <= i; ++j)
                acc = acc + theta.component(j).scale(u.at(i, j));
            CHECK(acc == theta.component(i).shift(a));
        }
    }
}

TEST_CASE("umbral Taylor formula") {
    std::mt19937_64 rng(16);
    const Rational a = random_rational(rng);
    CHECK(umbral_taylor(Poly::monomial(2), a, DeltaOp::forward_difference(2)) ==
          Poly::monomial(2).shift(a));
    CHECK(umbral_taylor(Poly::monomial(3), Rational(0), DeltaOp::touchard(3)) ==
          Poly::monomial(3));
    CHECK(umbral_taylor(Poly::monomial(3), Rational(1), DeltaOp::derivative(3)) ==
          Poly({Rational(1), Rational(3), Rational(3), Rational(1)}));

    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 1 + rng() % 5;
        for (const DeltaOp& d : named_operators(n)) {
            const Poly p = random_poly(rng, n);
            const Rational s = random_rational(rng);
            CHECK(umbral_taylor(p, s, d) == p.shift(s));
        }
    }
}

TEST_CASE("adjoint binomial curve") {
    // the curve of d* is ((-1)^k S_k(-t))
    for (std::size_t n = 1; n <= 5; ++n)
        for (const DeltaOp& d : named_operators(n)) {
            const Curve eta = binomial_curve(d);
            const Curve star = binomial_curve(d.adjoint());
            for (std::size_t k = 0; k <= n; ++k) {
                Poly expected = eta.component(k).reflect();
                if (k % 2 == 1) expected = -expected;
                CHECK(star.component(k) == expected);
            }
        }
}

TEST_CASE("Sheffer closure under convolution") {
    std::mt19937_64 rng(18);
    for (int rep = 0; rep < 15; ++rep) {
        const std::size_t n = 1 + rng() % 5;
        const DeltaOp d = random_normalized_delta(rng, n);
        const Curve eta = binomial_curve(d);
        const Seq v = random_invertible_seq(rng, n);
        const Seq w = random_invertible_seq(rng, n);
        CHECK(sheffer_curve(binom_convolve(v, w), eta) ==
              sheffer_curve(w, sheffer_curve(v, eta)));
    }
}
