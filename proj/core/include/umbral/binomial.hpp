#pragma once

#include <cstddef>

#include "umbral/rational.hpp"

namespace umbral {

/// C(m, k) from a cached Pascal triangle.  The cache grows on demand and is
/// safe for concurrent use (idempotent row construction under a lock).
mpz_class binomial_int(std::size_t m, std::size_t k);

mpz_class factorial_int(std::size_t n);

/// Falling factorial (n)_k = n (n-1) ... (n-k+1).
mpz_class falling_int(std::size_t n, std::size_t k);

Rational binomial(std::size_t m, std::size_t k);
Rational factorial(std::size_t n);
Rational falling(std::size_t n, std::size_t k);

}  // namespace umbral
