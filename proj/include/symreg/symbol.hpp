#ifndef SYMREG_SYMBOL_HPP
#define SYMREG_SYMBOL_HPP

#include <symreg/rational_function.hpp>

#include <cmath>
#include <complex>
#include <map>
#include <vector>

namespace symreg {

/// Exponent a + b z of a radial power |xi|^(a+bz).
struct Exponent {
    Rational a;
    Rational b;

    friend bool operator==(const Exponent& x, const Exponent& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator<(const Exponent& x, const Exponent& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
    Exponent operator+(const Exponent& o) const { return {a + o.a, b + o.b}; }
};

struct TermKey {
    Exponent exp;
    int logpow;

    friend bool operator==(const TermKey& x, const TermKey& y) {
        return x.exp == y.exp && x.logpow == y.logpow;
    }
    friend bool operator<(const TermKey& x, const TermKey& y) {
        if (!(x.exp == y.exp)) return x.exp < y.exp;
        return x.logpow < y.logpow;
    }
};

/// Finite sum of terms c(z) * |xi|^(a+bz) * log^l |xi| supported on |xi| >= 1
/// in dimension n, times a formal power of the sphere volume Omega_n.
class LogSymbol {
   public:
    explicit LogSymbol(int dim, int omega_power = 0) : dim_(dim), omega_power_(omega_power) {
        if (dim_ <= 0) throw std::invalid_argument("symbol dimension must be positive");
        if (omega_power_ < 0) throw std::invalid_argument("negative omega power");
    }

    int dim() const { return dim_; }
    int omega_power() const { return omega_power_; }
    const std::map<TermKey, RationalFunction>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponent& e, int logpow, const RationalFunction& c) {
        if (logpow < 0) throw std::invalid_argument("negative log power");
        if (c.is_zero()) return;
        auto key = TermKey{e, logpow};
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    RationalFunction coeff(const Exponent& e, int logpow) const {
        auto it = terms_.find(TermKey{e, logpow});
        return it == terms_.end() ? RationalFunction() : it->second;
    }

    static LogSymbol monomial(int dim, Rational a, Rational b, int logpow, RationalFunction c,
                              int omega_power = 0) {
        LogSymbol s(dim, omega_power);
        s.add_term({std::move(a), std::move(b)}, logpow, c);
        return s;
    }
    /// c * |xi|^a with z-independent exponent and coefficient.
    static LogSymbol power(int dim, Rational a, Rational c = Rational(1), int logpow = 0) {
        return monomial(dim, std::move(a), Rational(0), logpow, RationalFunction(std::move(c)));
    }
    static LogSymbol one(int dim) { return power(dim, Rational(0)); }
    static LogSymbol zero(int dim, int omega_power = 0) { return LogSymbol(dim, omega_power); }

    int max_logpow() const {
        int m = 0;
        for (const auto& [k, c] : terms_) m = std::max(m, k.logpow);
        return m;
    }

    bool is_z_independent() const {
        for (const auto& [k, c] : terms_)
            if (k.exp.b != 0 || !c.is_constant()) return false;
        return true;
    }

    /// Common slope b of all exponents; fails when slopes are mixed.
    Rational slope() const {
        if (terms_.empty()) throw std::domain_error("slope of the zero symbol");
        Rational b = terms_.begin()->first.exp.b;
        for (const auto& [k, c] : terms_)
            if (k.exp.b != b) throw std::domain_error("symbol has non-uniform slope");
        return b;
    }

    LogSymbol scaled(const RationalFunction& s) const {
        LogSymbol r(dim_, omega_power_);
        if (s.is_zero()) return r;
        for (const auto& [k, c] : terms_) r.add_term(k.exp, k.logpow, c * s);
        return r;
    }

    LogSymbol with_omega_power(int p) const {
        LogSymbol r(dim_, p);
        r.terms_ = terms_;
        return r;
    }

    friend bool operator==(const LogSymbol& x, const LogSymbol& y) {
        return x.dim_ == y.dim_ && x.omega_power_ == y.omega_power_ && x.terms_ == y.terms_;
    }

   private:
    int dim_;
    int omega_power_;
    std::map<TermKey, RationalFunction> terms_;
};

/// Ordered pure tensor of symbols sharing one dimension.
class TensorWord {
   public:
    explicit TensorWord(std::vector<LogSymbol> factors) : factors_(std::move(factors)) {
        if (factors_.empty()) throw std::invalid_argument("tensor word must be nonempty");
        for (const auto& f : factors_)
            if (f.dim() != factors_.front().dim())
                throw std::invalid_argument("tensor word factors must share a dimension");
    }

    int dim() const { return factors_.front().dim(); }
    std::size_t size() const { return factors_.size(); }
    const LogSymbol& operator[](std::size_t i) const { return factors_[i]; }
    const std::vector<LogSymbol>& factors() const { return factors_; }

   private:
    std::vector<LogSymbol> factors_;
};

inline LogSymbol sym_add(const LogSymbol& s, const LogSymbol& t) {
    if (s.dim() != t.dim()) throw std::invalid_argument("sym_add: dimension mismatch");
    if (s.omega_power() != t.omega_power())
        throw std::invalid_argument("sym_add: omega power mismatch");
    LogSymbol r = s;
    for (const auto& [k, c] : t.terms()) r.add_term(k.exp, k.logpow, c);
    return r;
}

inline LogSymbol sym_sub(const LogSymbol& s, const LogSymbol& t) {
    return sym_add(s, t.scaled(RationalFunction(Rational(-1))));
}

inline LogSymbol sym_mul(const LogSymbol& s, const LogSymbol& t) {
    if (s.dim() != t.dim()) throw std::invalid_argument("sym_mul: dimension mismatch");
    LogSymbol r(s.dim(), s.omega_power() + t.omega_power());
    for (const auto& [ks, cs] : s.terms())
        for (const auto& [kt, ct] : t.terms())
            r.add_term(ks.exp + kt.exp, ks.logpow + kt.logpow, cs * ct);
    return r;
}

/// Term keys with the maximal constant part a. A single entry is the
/// classical order; several entries mean generically incomparable orders
/// (equal a, different slopes b).
inline std::vector<Exponent> order_set(const LogSymbol& s) {
    if (s.is_zero()) throw std::domain_error("order of the zero symbol");
    Rational amax = s.terms().begin()->first.exp.a;
    for (const auto& [k, c] : s.terms()) amax = std::max(amax, k.exp.a);
    std::vector<Exponent> out;
    for (const auto& [k, c] : s.terms()) {
        if (k.exp.a != amax) continue;
        if (out.empty() || !(out.back() == k.exp)) out.push_back(k.exp);
    }
    return out;
}

inline Exponent order(const LogSymbol& s) {
    auto set = order_set(s);
    if (set.size() > 1) throw std::domain_error("symbol order is a set, not a single exponent");
    return set.front();
}

/// Coefficient of the |xi|^(-n) log^l component, times one formal Omega_n.
/// The Omega factor is implicit: callers account for omega_power()+1 units.
inline RationalFunction wodzicki_residue(const LogSymbol& s, int l = 0) {
    return s.coeff({Rational(-s.dim()), Rational(0)}, l);
}

/// d/dr of a dimension-1 symbol on r >= 1.
inline LogSymbol d_radial(const LogSymbol& s) {
    if (s.dim() != 1) throw std::invalid_argument("d_radial: dimension must be 1");
    LogSymbol r(1, s.omega_power());
    for (const auto& [k, c] : s.terms()) {
        if (k.exp.b != 0 || !c.is_constant())
            throw std::invalid_argument("d_radial: symbol must be z-independent");
        Exponent down{k.exp.a - 1, Rational(0)};
        r.add_term(down, k.logpow, c * RationalFunction(k.exp.a));
        if (k.logpow > 0) r.add_term(down, k.logpow - 1, c * RationalFunction(Rational(k.logpow)));
    }
    return r;
}

/// d/dz: differentiates the coefficient and expands d/dz |xi|^(a+bz) into a
/// log-raising term with factor b.
inline LogSymbol d_param(const LogSymbol& s) {
    LogSymbol r(s.dim(), s.omega_power());
    for (const auto& [k, c] : s.terms()) {
        r.add_term(k.exp, k.logpow, c.derivative());
        if (k.exp.b != 0) r.add_term(k.exp, k.logpow + 1, c * RationalFunction(k.exp.b));
    }
    return r;
}

/// Sets z = z0: exponents become a + b z0 with zero slope, coefficients c(z0).
inline LogSymbol specialise(const LogSymbol& s, const Rational& z0) {
    LogSymbol r(s.dim(), s.omega_power());
    for (const auto& [k, c] : s.terms())
        r.add_term({k.exp.a + k.exp.b * z0, Rational(0)}, k.logpow,
                   RationalFunction(c.evaluate(z0)));
    return r;
}

/// Logpow-l slice.
inline LogSymbol log_slice(const LogSymbol& s, int l) {
    LogSymbol r(s.dim(), s.omega_power());
    for (const auto& [k, c] : s.terms())
        if (k.logpow == l) r.add_term(k.exp, 0, c);
    return r;
}

/// H(z) * sigma * |xi|^(-qz): the standard holomorphic deformation.
inline LogSymbol riesz_family(const LogSymbol& s, const Rational& q,
                              const RationalFunction& H = RationalFunction(Rational(1))) {
    if (q == 0) throw std::invalid_argument("riesz_family: zero slope parameter");
    if (H.is_zero() || H.num().evaluate(Rational(0)) != H.den().evaluate(Rational(0)))
        throw std::invalid_argument("riesz_family: prefactor must equal 1 at z=0");
    if (!s.is_z_independent())
        throw std::invalid_argument("riesz_family: symbol is already z-dependent");
    LogSymbol r(s.dim(), s.omega_power());
    for (const auto& [k, c] : s.terms()) r.add_term({k.exp.a, -q}, k.logpow, c * H);
    return r;
}

/// Replaces the formal Omega_n unit by an exact value (2 in dimension 1),
/// folding omega_power into the coefficients.
inline LogSymbol substitute_omega(const LogSymbol& s, const Rational& value) {
    Rational f = rat_pow(value, s.omega_power());
    return s.scaled(RationalFunction(f)).with_omega_power(0);
}

template <typename S>
S evaluate(const LogSymbol& s, double r, const S& z, double omega_value = 1.0) {
    if (r < 1.0) return S(0);
    double lr = std::log(r);
    S acc(0);
    for (const auto& [k, c] : s.terms()) {
        S e = S(rat_to_double(k.exp.a)) + S(rat_to_double(k.exp.b)) * z;
        S term = c.template evaluate_at<S>(z) * std::exp(e * S(lr));
        for (int i = 0; i < k.logpow; ++i) term *= S(lr);
        acc += term;
    }
    return acc * S(std::pow(omega_value, s.omega_power()));
}

inline double evaluate(const LogSymbol& s, double r, double z = 0.0, double omega_value = 1.0) {
    return evaluate<double>(s, r, z, omega_value);
}

}  // namespace symreg

#endif
