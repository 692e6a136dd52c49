#include <atomic>
#include <random>
#include <thread>

#include "doctest.h"
#include "test_support.hpp"
#include "umbral/binomial.hpp"
#include "umbral/errors.hpp"
#include "umbral/seq.hpp"
#include "umbral/tri_matrix.hpp"

using namespace umbral;
using namespace umbral::testing;

namespace {

Seq Q(std::initializer_list<const char*> entries) {
    std::vector<Rational> es;
    for (const char* e : entries) es.push_back(Rational::parse(e));
    return Seq::from_entries(std::move(es));
}

}  // namespace

TEST_CASE("binomial convolution examples") {
    CHECK(binom_convolve(Seq::powers(2, Rational(1)), Seq::powers(2, Rational(1))) ==
          Seq::powers(2, Rational(2)));  // e(1) * e(1) = e(2)

    std::mt19937_64 rng(3);
    const Seq a = random_seq(rng, 4);
    CHECK(binom_convolve(a, Seq::unit(4)) == a);

    CHECK(binom_convolve(Q({"0", "1", "0"}), Q({"0", "1", "0"})) == Q({"0", "0", "2"}));

    CHECK_THROWS_AS(binom_convolve(Seq::unit(2), Seq::unit(3)), DomainError);
}

TEST_CASE("convolution matrix") {
    CHECK(conv_matrix(Seq::unit(3)) == LowerTriMatrix::identity(4));

    const LowerTriMatrix pascal = conv_matrix(Seq::powers(2, Rational(1)));
    CHECK(pascal.at(2, 0) == Rational(1));
    CHECK(pascal.at(2, 1) == Rational(2));
    CHECK(pascal.at(2, 2) == Rational(1));
    for (std::size_t i = 0; i <= 2; ++i)
        for (std::size_t j = 0; j <= i; ++j) CHECK(pascal.at(i, j) == binomial(i, j));

    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 1 + rng() % 6;
        const Seq a = random_seq(rng, n);
        const Seq b = random_seq(rng, n);
        CHECK(conv_matrix(a).apply(b) == binom_convolve(a, b));
        CHECK(conv_matrix(a) * conv_matrix(b) == conv_matrix(binom_convolve(a, b)));
    }
}

TEST_CASE("creation matrix") {
    const LowerTriMatrix n2 = creation_matrix(2);
    CHECK(n2.at(1, 0) == Rational(1));
    CHECK(n2.at(2, 1) == Rational(2));
    CHECK(n2.at(2, 0) == Rational(0));
    CHECK(n2.at(0, 0) == Rational(0));

    // N maps the evaluated standard curve (1, t, t^2) to (0, 1, 2t)
    std::mt19937_64 rng(9);
    const Rational t = random_rational(rng);
    const Seq image = n2.apply(Seq::powers(2, t));
    CHECK(image.entry(0) == Rational(0));
    CHECK(image.entry(1) == Rational(1));
    CHECK(image.entry(2) == Rational(2) * t);

    for (std::size_t n = 0; n <= 8; ++n) {
        LowerTriMatrix power = LowerTriMatrix::identity(n + 1);
        const LowerTriMatrix cm = creation_matrix(n);
        for (std::size_t k = 0; k <= n; ++k) power = power * cm;
        CHECK(power == LowerTriMatrix(n + 1));  // N^{n+1} = 0
    }
}

TEST_CASE("convolution inverse") {
    CHECK(conv_invert(Seq::powers(3, Rational(1))) == Seq::powers(3, Rational(-1)));
    CHECK(conv_invert(Seq::unit(3)) == Seq::unit(3));
    CHECK(conv_invert(Q({"1", "1", "1"})) == Q({"1", "-1", "1"}));
    CHECK_THROWS_AS(conv_invert(Q({"0", "1"})), DomainError);

    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 20; ++rep) {
        const Seq a = random_invertible_seq(rng, 1 + rng() % 7);
        CHECK(binom_convolve(a, conv_invert(a)) == Seq::unit(a.level()));
        CHECK(conv_invert(conv_invert(a)) == a);
    }
}

TEST_CASE("triangular solve, inverse, determinant") {
    const LowerTriMatrix id = LowerTriMatrix::identity(4);
    CHECK(id.inverse() == id);
    CHECK(id.det() == Rational(1));

    CHECK(conv_matrix(Seq::powers(5, Rational(1))).det() == Rational(1));

    CHECK(conv_matrix(Seq::powers(3, Rational(1))).inverse() ==
          conv_matrix(Seq::powers(3, Rational(-1))));

    LowerTriMatrix singular(3);
    singular.entry(1, 0) = Rational(1);
    CHECK_THROWS_AS(singular.solve(Seq::unit(2)), DomainError);

    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = rng() % 6;
        LowerTriMatrix m(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = 0; j < i; ++j) m.entry(i, j) = random_rational(rng);
            m.entry(i, i) = random_nonzero_rational(rng);
        }
        const Seq y = random_seq(rng, n);
        CHECK(m.apply(m.solve(y)) == y);
        CHECK(m * m.inverse() == LowerTriMatrix::identity(n + 1));
    }
}

TEST_CASE("binomial cache tolerates concurrent initialization") {
    std::vector<std::thread> workers;
    std::atomic<bool> ok{true};
    for (int w = 0; w < 4; ++w)
        workers.emplace_back([&, w] {
            for (std::size_t m = 0; m <= 40; ++m)
                for (std::size_t k = 0; k <= m; ++k) {
                    const Rational lhs = binomial(m, k);
                    const Rational rhs =
                        (k == 0 || k == m)
                            ? Rational(1)
                            : binomial(m - 1, k - 1) + binomial(m - 1, k);
                    if (lhs != rhs) ok = false;
                }
            (void)w;
        });
    for (auto& t : workers) t.join();
    CHECK(ok);
}

TEST_CASE("convolution algebra properties") {
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 1 + rng() % 8;
        const Seq a = random_seq(rng, n);
        const Seq b = random_seq(rng, n);
        const Seq c = random_seq(rng, n);
        CHECK(binom_convolve(a, b) == binom_convolve(b, a));
        CHECK(binom_convolve(binom_convolve(a, b), c) ==
              binom_convolve(a, binom_convolve(b, c)));

        const LowerTriMatrix cm = creation_matrix(n);
        CHECK(conv_matrix(a) * cm == cm * conv_matrix(a));
    }
}
