#ifndef SYMREG_NUMERIC_SYMBOL_HPP
#define SYMREG_NUMERIC_SYMBOL_HPP

#include <symreg/bernoulli.hpp>
#include <symreg/symbol.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <vector>

namespace symreg {

/// Raised when a summation tail is not integrable at the requested depth.
struct em_depth_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double real_part(double x) { return x; }
inline double real_part(const std::complex<double>& x) { return x.real(); }

/// Floating-point radial symbol: finite sum of c * t^e * log^l t on t >= 1,
/// with scalar type double or complex<double>.
template <typename S>
class NumSymbol {
   public:
    struct Term {
        S e;
        int l;
        S c;
    };

    NumSymbol() = default;

    void add(S e, int l, S c) {
        if (std::abs(c) == 0.0) return;
        for (auto& t : terms_)
            if (t.e == e && t.l == l) {
                t.c += c;
                return;
            }
        terms_.push_back({e, l, c});
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    static NumSymbol from(const LogSymbol& s, S z, double omega_value) {
        NumSymbol out;
        double of = std::pow(omega_value, s.omega_power());
        for (const auto& [k, c] : s.terms()) {
            S e = S(rat_to_double(k.exp.a)) + S(rat_to_double(k.exp.b)) * z;
            out.add(e, k.logpow, c.template evaluate_at<S>(z) * S(of));
        }
        return out;
    }

    S evaluate(double t) const {
        double lt = std::log(t);
        S acc(0);
        for (const auto& term : terms_) {
            S v = term.c * std::exp(term.e * S(lt));
            for (int i = 0; i < term.l; ++i) v *= S(lt);
            acc += v;
        }
        return acc;
    }

    NumSymbol derivative() const {
        NumSymbol out;
        for (const auto& t : terms_) {
            out.add(t.e - S(1), t.l, t.c * t.e);
            if (t.l > 0) out.add(t.e - S(1), t.l - 1, t.c * S(t.l));
        }
        return out;
    }

    NumSymbol scaled(S f) const {
        NumSymbol out;
        for (const auto& t : terms_) out.add(t.e, t.l, t.c * f);
        return out;
    }

    friend NumSymbol operator+(const NumSymbol& a, const NumSymbol& b) {
        NumSymbol out = a;
        for (const auto& t : b.terms_) out.add(t.e, t.l, t.c);
        return out;
    }

    friend NumSymbol operator*(const NumSymbol& a, const NumSymbol& b) {
        NumSymbol out;
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) out.add(x.e + y.e, x.l + y.l, x.c * y.c);
        return out;
    }

    /// Largest real part of an exponent; -infinity when empty.
    double max_real_order() const {
        double m = -std::numeric_limits<double>::infinity();
        for (const auto& t : terms_) m = std::max(m, real_part(t.e));
        return m;
    }

   private:
    std::vector<Term> terms_;
};

/// int_M^infinity t^u log^l t dt for u < -1, by parts.
inline double power_log_tail(double u, int l, double M) {
    if (u >= -1.0) throw em_depth_error("tail integral diverges: increase depth");
    double lM = std::log(M);
    double head = -std::pow(M, u + 1) * std::pow(lM, l) / (u + 1);
    if (l == 0) return head;
    return head - (l / (u + 1)) * power_log_tail(u, l - 1, M);
}

/// Termwise bound sum_i |c_i| int_M^inf t^(Re e_i) |log t|^l dt; requires
/// every exponent to have real part < -1.
template <typename S>
double abs_tail(const NumSymbol<S>& f, double M) {
    double acc = 0;
    for (const auto& t : f.terms()) acc += std::abs(t.c) * power_log_tail(real_part(t.e), t.l, M);
    return acc;
}

namespace detail {

struct GaussLegendre {
    std::vector<double> nodes;    // on [0,1]
    std::vector<double> weights;  // summing to 1
};

/// Nodes and weights via Newton iteration on the Legendre polynomial.
inline const GaussLegendre& gauss_legendre(int n = 24) {
    static std::map<int, GaussLegendre> cache;
    auto hit = cache.find(n);
    if (hit != cache.end()) return hit->second;
    GaussLegendre g = [n]() {
        GaussLegendre out;
        for (int i = 1; i <= n; ++i) {
            double x = std::cos(M_PI * (i - 0.25) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1, p1 = x;
                for (int j = 2; j <= n; ++j) {
                    double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = n * (x * p1 - p0) / (x * x - 1);
                double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            double p0 = 1, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1);
            out.nodes.push_back((x + 1) / 2);
            out.weights.push_back(1.0 / ((1 - x * x) * dp * dp));
        }
        return out;
    }();
    return cache.emplace(n, std::move(g)).first->second;
}

}  // namespace detail

namespace detail {

/// Gauss panel of w(t - m) f(t) over [a, b], a subinterval of [m, m+1].
template <typename S>
S gauss_panel(const Polynomial& w, const NumSymbol<S>& f, double m, double a, double b, int n) {
    const auto& g = gauss_legendre(n);
    S acc(0);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        double t = a + g.nodes[i] * (b - a);
        acc += S(g.weights[i] * w.evaluate_at<double>(t - m)) * f.evaluate(t);
    }
    return acc * S(b - a);
}

/// Bisect until the 24- and 16-point rules agree; high derivatives of the
/// summand are steep near the left endpoint and defeat a single panel.
template <typename S>
void adaptive_panel(const Polynomial& w, const NumSymbol<S>& f, double m, double a, double b,
                    int depth_left, S& total, double& est) {
    S p24 = gauss_panel(w, f, m, a, b, 24);
    S p16 = gauss_panel(w, f, m, a, b, 16);
    double diff = std::abs(p24 - p16);
    if (depth_left == 0 || diff <= 1e-15 * std::abs(p24) + 1e-18) {
        total += p24;
        est += diff;
        return;
    }
    double mid = (a + b) / 2;
    adaptive_panel(w, f, m, a, mid, depth_left - 1, total, est);
    adaptive_panel(w, f, m, mid, b, depth_left - 1, total, est);
}

}  // namespace detail

/// Quadrature of int_1^M w(frac(t)) f(t) dt where w is a fixed polynomial
/// applied to the fractional part, one adaptive Gauss panel per unit interval.
template <typename S>
S periodized_integral(const Polynomial& w, const NumSymbol<S>& f, int M, double* err_est) {
    S total(0);
    double est = 0;
    for (int m = 1; m < M; ++m)
        detail::adaptive_panel(w, f, static_cast<double>(m), static_cast<double>(m),
                               static_cast<double>(m + 1), 14, total, est);
    if (err_est) *err_est = est;
    return total;
}

/// Closed-form interpolant of partial sums: for integer N >= 1,
///   sum_{m=1}^{N} f(m) = closed(N) + constant + T(N),
/// with |T(N)| <= remainder_bound(N), monotone decreasing.
template <typename S>
struct EMClosed {
    NumSymbol<S> closed;
    S constant{};
    S integral_constant{};  // the N-independent part of int_1^N f, also in closed
    double const_err = 0;
    NumSymbol<S> top_derivative;  // f^(2k)
    int depth = 1;

    double remainder_bound(double N) const {
        return 4.0 / std::pow(2 * M_PI, 2 * depth) * abs_tail(top_derivative, N);
    }
};

/// Euler-Maclaurin split of the partial sums of f at depth k: boundary
/// derivatives through order 2k-1 plus a periodized-Bernoulli remainder of
/// order 2k. Exponents within 1e-8 of the critical value -1 but not within
/// 1e-12 are rejected as pole proximity.
template <typename S>
EMClosed<S> em_closed(const NumSymbol<S>& f, int k, double tail_tol = 1e-14) {
    if (k < 1) throw std::invalid_argument("euler-maclaurin depth must be positive");
    EMClosed<S> out;
    out.depth = k;

    for (const auto& t : f.terms()) {
        S s = t.e + S(1);
        double as = std::abs(s);
        if (as < 1e-12) {
            out.closed.add(S(0), t.l + 1, t.c / S(t.l + 1));
            continue;
        }
        if (as < 1e-8) throw std::domain_error("exponent too close to a summation pole");
        S spow = S(1);
        double lf = 1;  // l!/j! built downward
        for (int j = t.l; j >= 0; --j) {
            spow *= s;
            double sign = ((t.l - j) % 2 == 0) ? 1.0 : -1.0;
            out.closed.add(s, j, t.c * S(sign * lf) / spow);
            if (j > 0) lf *= j;  // after j: l!/ (j-1)! needs *j
        }
        // spow is now s^(l+1)
        double sign = (t.l % 2 == 0) ? -1.0 : 1.0;  // (-1)^(l+1)
        double fl = 1;
        for (int i = 2; i <= t.l; ++i) fl *= i;
        S cst = t.c * S(sign * fl) / spow;
        out.closed.add(S(0), 0, cst);
        out.integral_constant += cst;
    }

    // boundary terms at the running endpoint and at 1
    std::vector<NumSymbol<S>> deriv{f};
    for (int m = 1; m <= 2 * k; ++m) deriv.push_back(deriv.back().derivative());

    out.closed = out.closed + f.scaled(S(0.5));
    out.constant = f.evaluate(1.0) * S(0.5);
    for (int r = 1; r <= k; ++r) {
        double b = rat_to_double(bernoulli(2 * r)) ;
        double fact = 1;
        for (int i = 2; i <= 2 * r; ++i) fact *= i;
        S coef = S(b / fact);
        out.closed = out.closed + deriv[2 * r - 1].scaled(coef);
        out.constant -= coef * deriv[2 * r - 1].evaluate(1.0);
    }

    out.top_derivative = deriv[2 * k];
    if (!out.top_derivative.empty() && out.top_derivative.max_real_order() >= -1.0)
        throw em_depth_error("summation remainder not integrable: increase depth");

    // remainder constant -(1/(2k)!) int_1^inf Btilde_2k f^(2k)
    double scale = std::max(1.0, std::abs(out.constant));
    int M = 2;
    while (out.remainder_bound(M) > tail_tol * scale && M < 4096) M *= 2;
    double fact2k = 1;
    for (int i = 2; i <= 2 * k; ++i) fact2k *= i;
    double quad_err = 0;
    S integral = periodized_integral(bernoulli_poly(2 * k), out.top_derivative, M, &quad_err);
    out.constant -= integral / S(fact2k);
    out.const_err = out.remainder_bound(M) + quad_err / fact2k;
    return out;
}

/// Coefficient of the constant (exponent 0, log-free) term.
template <typename S>
S constant_coefficient(const NumSymbol<S>& f) {
    S acc(0);
    for (const auto& t : f.terms())
        if (std::abs(t.e) < 1e-12 && t.l == 0) acc += t.c;
    return acc;
}

}  // namespace symreg

#endif
