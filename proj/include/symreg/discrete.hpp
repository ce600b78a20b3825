#ifndef SYMREG_DISCRETE_HPP
#define SYMREG_DISCRETE_HPP

#include <symreg/chen.hpp>
#include <symreg/numeric_symbol.hpp>

#include <functional>

namespace symreg {

struct NumericResult {
    double value = 0;
    double error_bound = 0;
};

/// Exact-plus-constant interpolant of the symmetric partial sums
/// sum_{|m| <= N} sigma(m): a model-class symbol in N plus a numeric
/// constant with certified error.
struct EMInterpolant {
    LogSymbol closed_part;  // dimension 1, sphere factor folded in
    int depth = 1;
    double constant = 0;
    double constant_err = 0;
    NumSymbol<double> top_derivative;

    double remainder_bound(double N) const {
        return 4.0 / std::pow(2 * M_PI, 2 * depth) * abs_tail(top_derivative, N);
    }
    double evaluate_at(double N) const { return evaluate(closed_part, N) + constant; }
    explicit EMInterpolant(LogSymbol closed) : closed_part(std::move(closed)) {}
};

inline EMInterpolant em_interpolant(const LogSymbol& sigma, int k) {
    if (sigma.dim() != 1) throw std::invalid_argument("em_interpolant: dimension must be 1");
    if (!sigma.is_z_independent())
        throw std::invalid_argument("em_interpolant: symbol must not depend on z");
    if (k < 1) throw std::invalid_argument("em_interpolant: depth must be positive");
    LogSymbol s0 = substitute_omega(sigma, Rational(2));
    LogSymbol tau = s0.scaled(RationalFunction(Rational(2)));  // sigma(t) + sigma(-t)

    LogSymbol closed = substitute_omega(p_operator(s0), Rational(2));
    closed = sym_add(closed, tau.scaled(RationalFunction(Rational(1, 2))));
    LogSymbol dtau = tau;
    for (int r = 1; r <= k; ++r) {
        dtau = d_radial(dtau);  // tau^(2r-1)
        Rational coef = bernoulli(2 * r) / Rational(factorial(2 * r));
        closed = sym_add(closed, dtau.scaled(RationalFunction(coef)));
        dtau = d_radial(dtau);  // tau^(2r)
    }

    EMInterpolant out(closed);
    out.depth = k;
    EMClosed<double> em = em_closed(NumSymbol<double>::from(tau, 0.0, 1.0), k);
    out.constant = em.constant;
    out.constant_err = em.const_err;
    out.top_derivative = em.top_derivative;
    return out;
}

/// Finite part of the symmetric partial sums: constant coefficient of the
/// closed interpolant plus the Euler-Maclaurin constant.
inline NumericResult cutoff_sum(const LogSymbol& sigma, int k = 5) {
    EMInterpolant em = em_interpolant(sigma, k);
    double fp = rat_to_double(
        em.closed_part.coeff({Rational(0), Rational(0)}, 0).constant_value());
    return {fp + em.constant, em.constant_err};
}

struct ComplexResult {
    std::complex<double> value{0, 0};
    double error_bound = 0;
};

/// Meromorphic continuation of z -> sum over nonzero lattice points of
/// sigma |xi|^(-qz), evaluated at a numeric z away from the pole set: all
/// power-of-N interpolant terms drop out, leaving the integral constant
/// plus the Euler-Maclaurin constant.
inline ComplexResult cutoff_sum_family(const LogSymbol& sigma, const Rational& q,
                                       std::complex<double> z, int k = 5) {
    LogSymbol fam = riesz_family(substitute_omega(sigma, Rational(2)), q);
    NumSymbol<std::complex<double>> tau =
        NumSymbol<std::complex<double>>::from(fam, z, 1.0).scaled(2.0);
    EMClosed<std::complex<double>> em = em_closed(tau, k);
    return {em.integral_constant + em.constant, em.const_err};
}

/// Symmetric partial sum of integer samples.
inline double discrete_p(const std::function<double(long)>& f, long n) {
    double acc = f(0);
    for (long m = 1; m <= n; ++m) acc += f(m) + f(-m);
    return acc;
}

inline double discrete_p(const LogSymbol& sigma, long n) {
    LogSymbol s0 = substitute_omega(sigma, Rational(2));
    double acc = 0;
    for (long m = 1; m <= n; ++m) acc += evaluate(s0, static_cast<double>(m));
    return 2 * acc;
}

/// One-sided strict sum over 0 < m < n.
inline double strict_p(const std::function<double(long)>& f, long n) {
    double acc = 0;
    for (long m = 1; m < n; ++m) acc += f(m);
    return acc;
}

/// One-sided weak sum over 0 < m <= n.
inline double weak_p(const std::function<double(long)>& f, long n) {
    double acc = 0;
    for (long m = 1; m <= n; ++m) acc += f(m);
    return acc;
}

namespace detail {

/// One stage of a nested-sum chain: exact cumulative table up to the
/// crossover radius and an interpolant symbol plus constant beyond it.
struct SumLevel {
    std::vector<double> cumulative;  // A[n], n = 0..N0
    NumSymbol<double> hhat;          // interpolant of the summand h(n)
    NumSymbol<double> closed;        // interpolant of A(n) minus the constant
    double constant = 0;
    double err = 0;        // |A(n) - (closed(n)+constant)| for n >= N0
    double point_err = 0;  // |h(n) - hhat(n)| for n > N0
};

/// base: the factor f(n) at this level; inner: deeper level or null;
/// strict: pair f(n) with the inner cumulative at n-1 instead of n.
inline SumLevel build_level(const NumSymbol<double>& base, const SumLevel* inner, bool strict,
                            int depth, int N0) {
    SumLevel lv;
    lv.cumulative.assign(N0 + 1, 0.0);
    for (int n = 1; n <= N0; ++n) {
        double inner_val = 1.0;
        if (inner) inner_val = strict ? inner->cumulative[n - 1] : inner->cumulative[n];
        lv.cumulative[n] = lv.cumulative[n - 1] + base.evaluate(n) * inner_val;
    }

    lv.hhat = base;
    if (inner) {
        NumSymbol<double> psi = inner->closed;
        psi.add(0.0, 0, inner->constant);
        if (strict) psi = psi + inner->hhat.scaled(-1.0);
        lv.hhat = base * psi;
    }

    EMClosed<double> em = em_closed(lv.hhat, depth);
    lv.closed = em.closed;
    double drift = 0;  // exact summand minus its interpolant over the table
    for (int n = 1; n <= N0; ++n) {
        double inner_val = 1.0;
        if (inner) inner_val = strict ? inner->cumulative[n - 1] : inner->cumulative[n];
        drift += base.evaluate(n) * inner_val - lv.hhat.evaluate(n);
    }
    lv.constant = em.constant + drift;

    double base_at = std::abs(base.evaluate(N0));
    // crude mass of the factor beyond the table; a fixed proxy when the
    // factor alone is not integrable (the nested product still is)
    double base_tail = base.max_real_order() < -1.0 - 1e-9 ? abs_tail(base, N0) : 100.0;
    double inner_point = inner ? inner->err + (strict ? inner->point_err : 0.0) : 0.0;
    lv.point_err = base_at * inner_point;
    lv.err = em.remainder_bound(N0) + em.const_err + base_tail * inner_point +
             lv.point_err;  // covers the partial drift left beyond the table
    return lv;
}

}  // namespace detail

/// Nested sum over n_1 >= n_2 >= ... >= n_k >= 1 (weak) or strict, of the
/// product of the level factors, to convergence.
inline NumericResult nested_sum(const std::vector<NumSymbol<double>>& bases, bool strict,
                                int depth = 5, int N0 = 40) {
    if (bases.empty()) throw std::invalid_argument("nested_sum: no factors");
    std::vector<detail::SumLevel> levels;
    levels.reserve(bases.size());
    for (std::size_t j = bases.size(); j-- > 1;)
        levels.push_back(detail::build_level(bases[j], levels.empty() ? nullptr : &levels.back(),
                                             strict, depth, N0));
    detail::SumLevel top = detail::build_level(
        bases[0], levels.empty() ? nullptr : &levels.back(), strict, depth, N0);
    if (!top.hhat.empty() && top.hhat.max_real_order() >= -1.0)
        throw std::domain_error("nested_sum: outer sum diverges; regularised mode required");
    double value = constant_coefficient(top.closed) + top.constant;
    return {value, top.err};
}

/// Cut-off Chen sum of a dimension-1 word with the symmetric summation
/// operator: equals 2^k times the weak nested zeta-type sum.
inline NumericResult discrete_chen_sum(const TensorWord& w, int depth = 5, int N0 = 40,
                                       bool strict = false) {
    std::vector<NumSymbol<double>> bases;
    for (const auto& f : w.factors()) {
        if (f.dim() != 1) throw std::invalid_argument("discrete_chen_sum: dimension must be 1");
        if (f.is_zero()) return {0.0, 0.0};
        bases.push_back(
            NumSymbol<double>::from(substitute_omega(f, Rational(2)), 0.0, 1.0).scaled(2.0));
    }
    return nested_sum(bases, strict, depth, N0);
}

struct SumSpec {
    std::vector<double> exponents;
    bool strict = true;  // true: multiple zeta; false: weak variant
    double tolerance = 1e-9;
};

/// Multiple zeta value (strict) or its weak-inequality variant.
inline NumericResult mzv(const SumSpec& spec, int depth = 5, int N0 = 40) {
    if (spec.exponents.empty()) throw std::invalid_argument("mzv: empty exponent list");
    if (spec.tolerance <= 0) throw std::invalid_argument("mzv: tolerance must be positive");
    if (spec.exponents.front() <= 1.0)
        throw std::domain_error("mzv: leading exponent must exceed 1");
    for (double s : spec.exponents)
        if (s < 1.0) throw std::domain_error("mzv: exponents must be at least 1");
    std::vector<NumSymbol<double>> bases;
    for (double s : spec.exponents) {
        NumSymbol<double> f;
        f.add(-s, 0, 1.0);
        bases.push_back(f);
    }
    // deeper chains trade truncation error for cancellation in the closed
    // parts, so scan the depths and keep the best certified bound
    NumericResult best{0, std::numeric_limits<double>::infinity()};
    for (int d = 2; d <= depth; ++d) {
        NumericResult r = nested_sum(bases, spec.strict, d, N0);
        if (r.error_bound < best.error_bound) best = r;
    }
    if (best.error_bound > spec.tolerance)
        best = nested_sum(bases, spec.strict, 3, std::max(2 * N0, 200));
    return best;
}

/// All interleavings of two ordered blocks where one slot may absorb one
/// element of each: entries are (left index or -1, right index or -1).
using MixPattern = std::vector<std::pair<int, int>>;

inline std::vector<MixPattern> mixable_shuffles(int k, int l) {
    if (k < 1 || l < 1) throw std::invalid_argument("mixable_shuffles: blocks must be nonempty");
    if (k + l > 8) throw std::invalid_argument("mixable_shuffles: size cap exceeded");
    std::vector<MixPattern> out;
    MixPattern cur;
    std::function<void(int, int)> gen = [&](int i, int j) {
        if (i == k && j == l) {
            out.push_back(cur);
            return;
        }
        if (i < k) {
            cur.push_back({i, -1});
            gen(i + 1, j);
            cur.pop_back();
        }
        if (j < l) {
            cur.push_back({-1, j});
            gen(i, j + 1);
            cur.pop_back();
        }
        if (i < k && j < l) {
            cur.push_back({i, j});
            gen(i + 1, j + 1);
            cur.pop_back();
        }
    };
    gen(0, 0);
    return out;
}

struct StuffleReport {
    double lhs = 0;
    double rhs = 0;
    double residual = 0;
    bool pass = false;
};

/// Checks zeta(s) zeta(t) = sum over mixable shuffles of the merged zetas.
inline StuffleReport verify_stuffle(const std::vector<double>& s, const std::vector<double>& t,
                                    double tol, int depth = 5, int N0 = 40) {
    auto z = [&](const std::vector<double>& e) {
        return mzv({e, true, tol / 10}, depth, N0).value;
    };
    StuffleReport rep;
    rep.lhs = z(s) * z(t);
    for (const auto& pat : mixable_shuffles(static_cast<int>(s.size()),
                                            static_cast<int>(t.size()))) {
        std::vector<double> merged;
        for (const auto& [i, j] : pat)
            merged.push_back((i >= 0 ? s[i] : 0.0) + (j >= 0 ? t[j] : 0.0));
        rep.rhs += z(merged);
    }
    rep.residual = std::abs(rep.lhs - rep.rhs);
    rep.pass = rep.residual < tol;
    return rep;
}

}  // namespace symreg

#endif
