#include "umbral/binomial.hpp"

#include <deque>
#include <mutex>
#include <vector>

namespace umbral {

namespace {

// Rows live in a deque so previously built rows stay put while new ones are
// appended; reads copy the value out under the same lock.
std::mutex g_pascal_mutex;
std::deque<std::vector<mpz_class>> g_pascal;

}  // namespace

mpz_class binomial_int(std::size_t m, std::size_t k) {
    if (k > m) return 0;
    std::lock_guard<std::mutex> lock(g_pascal_mutex);
    while (g_pascal.size() <= m) {
        std::size_t r = g_pascal.size();
        std::vector<mpz_class> row(r + 1, 1);
        for (std::size_t j = 1; j < r; ++j) row[j] = g_pascal[r - 1][j - 1] + g_pascal[r - 1][j];
        g_pascal.push_back(std::move(row));
    }
    return g_pascal[m][k];
}

mpz_class factorial_int(std::size_t n) {
    mpz_class f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
    return f;
}

mpz_class falling_int(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    mpz_class f = 1;
    for (std::size_t i = 0; i < k; ++i) f *= static_cast<unsigned long>(n - i);
    return f;
}

Rational binomial(std::size_t m, std::size_t k) { return Rational(binomial_int(m, k)); }
Rational factorial(std::size_t n) { return Rational(factorial_int(n)); }
Rational falling(std::size_t n, std::size_t k) { return Rational(falling_int(n, k)); }

}  // namespace umbral
