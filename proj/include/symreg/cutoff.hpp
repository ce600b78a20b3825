#ifndef SYMREG_CUTOFF_HPP
#define SYMREG_CUTOFF_HPP

#include <symreg/symbol.hpp>

namespace symreg {

/// Large-R expansion of the integral over 1 <= |xi| <= R: power-log divergent
/// terms, pure log-divergent terms, and the constant (finite part). All
/// coefficients carry omega_power formal units of Omega_n.
struct AsymptoticExpansion {
    std::map<TermKey, RationalFunction> divergent;   // coefficient of R^(a+bz) log^p R
    std::map<int, RationalFunction> log_divergent;   // coefficient of log^q R, q >= 1
    RationalFunction constant;
    int omega_power = 0;
};

/// Integrates each term c |xi|^(a+bz) log^l |xi| over the annulus radially:
/// int_1^R r^(s-1) log^l r dr with s = a+bz+n, split by whether s vanishes
/// identically.
inline AsymptoticExpansion ball_expansion(const LogSymbol& s) {
    AsymptoticExpansion out;
    out.omega_power = s.omega_power() + 1;
    Rational n(s.dim());
    for (const auto& [k, c] : s.terms()) {
        int l = k.logpow;
        if (k.exp.a + n == 0 && k.exp.b == 0) {
            auto& slot = out.log_divergent[l + 1];
            slot += c * RationalFunction(Rational(1, l + 1));
            if (slot.is_zero()) out.log_divergent.erase(l + 1);
            continue;
        }
        RationalFunction srf =
            RationalFunction(Polynomial(std::vector<Rational>{k.exp.a + n, k.exp.b}));
        RationalFunction spow(Rational(1));  // s^(l-j+1), built downward from j=l
        for (int j = l; j >= 0; --j) {
            spow *= srf;
            Rational f = Rational(factorial(l)) / Rational(factorial(j));
            if ((l - j) % 2 == 1) f = -f;
            TermKey key{{k.exp.a + n, k.exp.b}, j};
            auto it = out.divergent.find(key);
            if (it == out.divergent.end()) it = out.divergent.emplace(key, RationalFunction()).first;
            it->second += c * RationalFunction(f) / spow;
            if (it->second.is_zero()) out.divergent.erase(it);
        }
        // spow is now s^(l+1)
        Rational f(factorial(l));
        if (l % 2 == 0) f = -f;  // (-1)^(l+1)
        out.constant += c * RationalFunction(f) / spow;
    }
    return out;
}

/// Finite part of the ball integral; exact rational function of z, in
/// Omega_n^(omega_power+1) units.
inline RationalFunction cutoff_integral(const LogSymbol& s) {
    return ball_expansion(s).constant;
}

/// Finite part after rescaling the radius by mu, as a polynomial in the
/// formal quantity log(mu): entry j is the coefficient of log^j(mu).
inline std::vector<RationalFunction> rescaled_finite_part(const LogSymbol& s, const Rational& mu) {
    if (mu <= 0) throw std::invalid_argument("rescaled_finite_part: scale must be positive");
    AsymptoticExpansion e = ball_expansion(s);
    std::vector<RationalFunction> out{e.constant};
    if (mu == 1) return out;
    for (const auto& [q, c] : e.log_divergent) {
        if (static_cast<int>(out.size()) <= q) out.resize(q + 1);
        out[q] = c;
    }
    return out;
}

/// Product of the factor finite parts, in Omega units summing the factors'
/// omega_power+1 each.
inline RationalFunction multi_cutoff_integral(const TensorWord& w) {
    RationalFunction p(Rational(1));
    for (const auto& f : w.factors()) p *= cutoff_integral(f);
    return p;
}

inline int multi_omega_power(const TensorWord& w) {
    int p = 0;
    for (const auto& f : w.factors()) p += f.omega_power() + 1;
    return p;
}

}  // namespace symreg

#endif
