#ifndef SYMREG_MEROMORPHIC_HPP
#define SYMREG_MEROMORPHIC_HPP

#include <symreg/chen.hpp>
#include <symreg/laurent.hpp>

namespace symreg {

/// Laurent germ at z=0 of a regularised integral, with a certified pole
/// bound and the formal Omega unit it carries.
struct MeromorphicGerm {
    LaurentSeries series;
    int pole_order = 0;
    int omega_power = 0;
};

inline MeromorphicGerm germ_of_integral(const LogSymbol& family, int K) {
    LaurentSeries s = laurent_of_rational(cutoff_integral(family), K);
    return {s, s.pole_order(), family.omega_power() + 1};
}

/// Finite part at z=0 of the integral germ.
inline Rational regularised_integral(const LogSymbol& family) {
    return germ_of_integral(family, 0).series.finite_part();
}

/// Ordinary residue of the family frozen at z=0: the coefficient of the
/// log-free degree -n component, one Omega unit implied.
inline Rational frozen_residue(const LogSymbol& family) {
    return wodzicki_residue(specialise(family, Rational(0)), 0).constant_value();
}

struct KVCoefficients {
    std::map<int, Rational> r;   // pole coefficients r_j of z^(-j), j = 1..k+1
    Rational fp;                 // constant coefficient
    std::map<int, Rational> s;   // regular coefficients s_j of z^j, j = 1..K
};

/// Laurent coefficients of the integral germ from residues of parameter
/// derivatives of the log-power slices, bypassing the integral itself.
inline KVCoefficients kv_coefficients(const LogSymbol& family, int K) {
    Rational ap = family.slope();  // derivative of the order in z
    if (ap == 0) throw std::invalid_argument("kv_coefficients: order slope vanishes");
    int k = family.max_logpow();

    // chains[l][m] = m-th parameter derivative of the logpow-l slice
    std::vector<std::vector<LogSymbol>> chains(k + 1);
    for (int l = 0; l <= k; ++l) {
        chains[l].push_back(log_slice(family, l));
        for (int m = 1; m <= K + l + 1; ++m)
            chains[l].push_back(d_param(chains[l].back()));
    }
    auto res0 = [](const LogSymbol& s) { return frozen_residue(s); };
    auto sign_over_ap = [&](int l) {  // (-1)^(l+1) / ap^(l+1)
        Rational v = rat_pow(ap, l + 1);
        return (l % 2 == 0 ? Rational(-1) : Rational(1)) / v;
    };

    KVCoefficients out;
    for (int j = 1; j <= k + 1; ++j) {
        Rational rj(0);
        for (int l = j - 1; l <= k; ++l)
            rj += sign_over_ap(l) * Rational(factorial(l)) / Rational(factorial(l + 1 - j)) *
                  res0(chains[l][l + 1 - j]);
        out.r[j] = rj;
    }

    Rational fp = cutoff_integral(specialise(family, Rational(0))).constant_value();
    for (int l = 0; l <= k; ++l)
        fp += sign_over_ap(l) * Rational(1, l + 1) * res0(chains[l][l + 1]);
    out.fp = fp;

    LogSymbol deriv = family;
    for (int j = 1; j <= K; ++j) {
        deriv = d_param(deriv);
        Rational sj = cutoff_integral(specialise(deriv, Rational(0))).constant_value();
        for (int l = 0; l <= k; ++l)
            sj += sign_over_ap(l) * Rational(factorial(l) * factorial(j)) /
                  Rational(factorial(j + l + 1)) * res0(chains[l][j + l + 1]);
        out.s[j] = sj / Rational(factorial(j));  // derivative to Taylor coefficient
    }
    return out;
}

/// Germ of the permutation-summed nested integral of a word of families
/// sharing one slope. The pole order is at most the word length.
inline MeromorphicGerm chen_germ(const TensorWord& w, int K, std::size_t max_k = 0) {
    Rational b = w[0].slope();
    for (const auto& f : w.factors())
        if (f.slope() != b) throw std::invalid_argument("chen_germ: factors must share a slope");
    LaurentSeries s = laurent_of_rational(chen_cutoff_integral(w, max_k), K);
    return {s, s.pole_order(), multi_omega_power(w)};
}

}  // namespace symreg

#endif
