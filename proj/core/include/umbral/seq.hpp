#pragma once

#include <cstddef>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/// Finite sequence a_0..a_n, an element of the binomial convolution algebra
/// at level n.
class Seq {
public:
    explicit Seq(std::size_t level) : entries_(level + 1, Rational(0)) {}
    static Seq from_entries(std::vector<Rational> entries);

    /// e_0 = (1, 0, ..., 0), the convolution unit.
    static Seq unit(std::size_t level);
    /// e_k basis sequence.
    static Seq basis(std::size_t level, std::size_t k);
    /// e(a) = (1, a, a^2, ..., a^n), the evaluated standard curve.
    static Seq powers(std::size_t level, const Rational& a);

    std::size_t level() const { return entries_.size() - 1; }
    const Rational& entry(std::size_t k) const { return entries_[k]; }
    Rational& entry(std::size_t k) { return entries_[k]; }
    const std::vector<Rational>& entries() const { return entries_; }

    friend bool operator==(const Seq& a, const Seq& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const Seq& a, const Seq& b) { return !(a == b); }

private:
    std::vector<Rational> entries_;
};

/// Binomial convolution c_m = sum_k C(m,k) a_k b_{m-k}.
/// Throws DomainError(LevelMismatch) when levels differ.
Seq binom_convolve(const Seq& a, const Seq& b);

/// Inverse for binomial convolution, by forward substitution on M(a) x = e_0.
/// Throws DomainError(NotInvertibleSeq) when a_0 = 0.
Seq conv_invert(const Seq& a);

}  // namespace umbral
