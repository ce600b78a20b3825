#ifndef SYMREG_CHEN_HPP
#define SYMREG_CHEN_HPP

#include <symreg/cutoff.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace symreg {

/// Volume integral over the ball |xi| <= |eta|, as a symbol in eta. The
/// result lives in the same model class: divergent primitives keep their
/// powers of |eta|, critical terms gain one log, constants land on the
/// exponent-0 logpow-0 slot.
inline LogSymbol p_operator(const LogSymbol& s) {
    AsymptoticExpansion e = ball_expansion(s);
    LogSymbol r(s.dim(), s.omega_power() + 1);
    for (const auto& [k, c] : e.divergent) r.add_term(k.exp, k.logpow, c);
    for (const auto& [q, c] : e.log_divergent) r.add_term({Rational(0), Rational(0)}, q, c);
    r.add_term({Rational(0), Rational(0)}, 0, e.constant);
    return r;
}

/// Right fold P(...P(P(s_k) s_{k-1})...) s_1 collapsing the nested simplex
/// integral to a single radial variable.
inline LogSymbol nested_chen(const TensorWord& w) {
    LogSymbol acc = w[w.size() - 1];
    for (std::size_t i = w.size() - 1; i-- > 0;) acc = sym_mul(w[i], p_operator(acc));
    return acc;
}

inline std::size_t permutation_cap() {
    if (const char* env = std::getenv("SYMREG_MAX_K")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 7;
}

/// Sum over all factor orderings of the finite part of the nested integral.
inline RationalFunction chen_cutoff_integral(const TensorWord& w, std::size_t max_k = 0) {
    if (max_k == 0) max_k = permutation_cap();
    if (w.size() > max_k)
        throw std::invalid_argument("chen_cutoff_integral: word length exceeds permutation cap");
    std::vector<std::size_t> idx(w.size());
    std::iota(idx.begin(), idx.end(), 0);
    RationalFunction sum;
    do {
        std::vector<LogSymbol> perm;
        perm.reserve(w.size());
        for (std::size_t i : idx) perm.push_back(w[i]);
        sum += cutoff_integral(nested_chen(TensorWord(std::move(perm))));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return sum;
}

struct SymbolShuffleReport {
    LogSymbol lhs;
    LogSymbol rhs;
    bool equal;
};

/// Checks prod_i P(s_i) = sum over orderings of P(nested word): an identity
/// of functions, expected to hold for every word.
inline SymbolShuffleReport verify_symbol_shuffle(const TensorWord& w, std::size_t max_k = 0) {
    if (max_k == 0) max_k = permutation_cap();
    if (w.size() > max_k)
        throw std::invalid_argument("verify_symbol_shuffle: word length exceeds permutation cap");
    LogSymbol lhs = p_operator(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) lhs = sym_mul(lhs, p_operator(w[i]));
    std::vector<std::size_t> idx(w.size());
    std::iota(idx.begin(), idx.end(), 0);
    LogSymbol rhs = LogSymbol::zero(w.dim(), lhs.omega_power());
    do {
        std::vector<LogSymbol> perm;
        perm.reserve(w.size());
        for (std::size_t i : idx) perm.push_back(w[i]);
        rhs = sym_add(rhs, p_operator(nested_chen(TensorWord(std::move(perm)))));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return {lhs, rhs, lhs == rhs};
}

/// True when every left partial sum of the factor orders is a non-integer
/// for generic z: either the slope part is nonzero or the constant part is
/// not an integer.
inline bool partial_sums_nonintegral(const TensorWord& w) {
    Rational a(0), b(0);
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (w[j].is_zero()) return false;
        auto ords = order_set(w[j]);
        if (ords.size() != 1) return false;
        a += ords.front().a;
        b += ords.front().b;
        if (b == 0 && denominator(a) == 1) return false;
    }
    return true;
}

struct IntegralShuffleReport {
    RationalFunction product;
    RationalFunction shuffle_sum;
    bool equal;
    bool partial_sums_nonintegral;
};

inline IntegralShuffleReport verify_integral_shuffle(const TensorWord& w, std::size_t max_k = 0) {
    RationalFunction product = multi_cutoff_integral(w);
    RationalFunction shuffle_sum = chen_cutoff_integral(w, max_k);
    return {product, shuffle_sum, product == shuffle_sum, partial_sums_nonintegral(w)};
}

}  // namespace symreg

#endif
