#include "umbral/seq.hpp"

#include "umbral/binomial.hpp"
#include "umbral/errors.hpp"

namespace umbral {

Seq Seq::from_entries(std::vector<Rational> entries) {
    if (entries.empty()) throw DomainError("ParseError", "sequence needs at least one entry");
    Seq s(entries.size() - 1);
    s.entries_ = std::move(entries);
    return s;
}

Seq Seq::unit(std::size_t level) { return basis(level, 0); }

Seq Seq::basis(std::size_t level, std::size_t k) {
    Seq s(level);
    s.entries_[k] = Rational(1);
    return s;
}

Seq Seq::powers(std::size_t level, const Rational& a) {
    Seq s(level);
    Rational p(1);
    for (std::size_t k = 0; k <= level; ++k) {
        s.entries_[k] = p;
        p *= a;
    }
    return s;
}

Seq binom_convolve(const Seq& a, const Seq& b) {
    if (a.level() != b.level())
        throw DomainError("LevelMismatch", "binomial convolution needs equal levels");
    Seq c(a.level());
    for (std::size_t m = 0; m <= a.level(); ++m) {
        Rational acc(0);
        for (std::size_t k = 0; k <= m; ++k)
            acc += binomial(m, k) * a.entry(k) * b.entry(m - k);
        c.entry(m) = acc;
    }
    return c;
}

Seq conv_invert(const Seq& a) {
    if (a.entry(0).is_zero())
        throw DomainError("NotInvertibleSeq", "sequence with a_0 = 0 is not invertible");
    Seq x(a.level());
    x.entry(0) = a.entry(0).inverse();
    for (std::size_t m = 1; m <= a.level(); ++m) {
        Rational acc(0);
        for (std::size_t j = 0; j < m; ++j)
            acc += binomial(m, j) * a.entry(m - j) * x.entry(j);
        x.entry(m) = -acc / a.entry(0);
    }
    return x;
}

}  // namespace umbral
