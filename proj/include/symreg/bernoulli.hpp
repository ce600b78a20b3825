#ifndef SYMREG_BERNOULLI_HPP
#define SYMREG_BERNOULLI_HPP

#include <symreg/polynomial.hpp>

namespace symreg {

/// B_m for the generating function t/(e^t - 1), so B_1 = -1/2.
inline Rational bernoulli(unsigned m) {
    static std::vector<Rational> cache{Rational(1)};
    while (cache.size() <= m) {
        unsigned n = static_cast<unsigned>(cache.size());
        Rational acc(0);
        for (unsigned j = 0; j < n; ++j)
            acc += Rational(binomial(n + 1, j)) * cache[j];
        cache.push_back(-acc / Rational(n + 1));
    }
    return cache[m];
}

/// Bernoulli polynomial B_n(x) = sum_j C(n,j) B_j x^(n-j).
inline Polynomial bernoulli_poly(unsigned n) {
    std::vector<Rational> c(n + 1, Rational(0));
    for (unsigned j = 0; j <= n; ++j)
        c[n - j] = Rational(binomial(n, j)) * bernoulli(j);
    return Polynomial(std::move(c));
}

}  // namespace symreg

#endif
