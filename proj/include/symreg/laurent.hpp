#ifndef SYMREG_LAURENT_HPP
#define SYMREG_LAURENT_HPP

#include <symreg/rational_function.hpp>

#include <map>

namespace symreg {

/// Truncated Laurent series at z=0. Coefficients for degrees above the
/// truncation order are unknown (not zero); degrees below -pole_bound are
/// exactly zero. Sentinel truncation for series known to all orders.
class LaurentSeries {
   public:
    static constexpr int kExact = 1 << 20;

    LaurentSeries() : pole_bound_(0), trunc_(kExact) {}
    LaurentSeries(std::map<int, Rational> coeffs, int pole_bound, int trunc)
        : coeffs_(std::move(coeffs)), pole_bound_(pole_bound), trunc_(trunc) {
        if (pole_bound_ < 0) throw std::invalid_argument("negative pole bound");
        for (auto it = coeffs_.begin(); it != coeffs_.end();) {
            if (it->second == 0) {
                it = coeffs_.erase(it);
                continue;
            }
            if (it->first < -pole_bound_ || it->first > trunc_)
                throw std::invalid_argument("laurent coefficient outside declared bounds");
            ++it;
        }
    }

    static LaurentSeries zero(int trunc = kExact) { return LaurentSeries({}, 0, trunc); }
    static LaurentSeries monomial(int degree, Rational c, int trunc = kExact) {
        return LaurentSeries({{degree, std::move(c)}}, degree < 0 ? -degree : 0, trunc);
    }

    const std::map<int, Rational>& coeffs() const { return coeffs_; }
    int pole_bound() const { return pole_bound_; }
    int trunc() const { return trunc_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(int degree) const {
        auto it = coeffs_.find(degree);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    /// Largest j with a nonzero degree -j coefficient; 0 if holomorphic.
    int pole_order() const {
        if (coeffs_.empty() || coeffs_.begin()->first >= 0) return 0;
        return -coeffs_.begin()->first;
    }

    LaurentSeries pole_part() const {
        std::map<int, Rational> c(coeffs_.begin(), coeffs_.lower_bound(0));
        return LaurentSeries(std::move(c), pole_bound_, trunc_);
    }

    Rational finite_part() const { return coeff(0); }

    Rational residue_at_order(int j) const {
        if (j <= 0) throw std::invalid_argument("residue order must be positive");
        return coeff(-j);
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        std::map<int, Rational> c = a.coeffs_;
        for (const auto& [d, v] : b.coeffs_) c[d] += v;
        return LaurentSeries(std::move(c), std::max(a.pole_bound_, b.pole_bound_),
                             std::min(a.trunc_, b.trunc_));
    }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
        return a + b.scaled(Rational(-1));
    }
    LaurentSeries scaled(const Rational& s) const {
        if (s == 0) return LaurentSeries({}, 0, trunc_);
        std::map<int, Rational> c = coeffs_;
        for (auto& [d, v] : c) v *= s;
        return LaurentSeries(std::move(c), pole_bound_, trunc_);
    }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        int t = std::min({a.trunc_ == kExact && b.trunc_ == kExact ? kExact : kExact - 1,
                          a.trunc_ == kExact ? kExact : a.trunc_ - b.pole_bound_,
                          b.trunc_ == kExact ? kExact : b.trunc_ - a.pole_bound_});
        if (t < -(a.pole_bound_ + b.pole_bound_))
            throw truncation_error("laurent product: truncation exhausted");
        std::map<int, Rational> c;
        for (const auto& [da, va] : a.coeffs_)
            for (const auto& [db, vb] : b.coeffs_) {
                int d = da + db;
                if (d <= t) c[d] += va * vb;
            }
        return LaurentSeries(std::move(c), a.pole_bound_ + b.pole_bound_, t);
    }

    /// Equality notion of the library: equal coefficient maps through the
    /// smaller of the two truncation orders.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        int t = std::min(a.trunc_, b.trunc_);
        for (const auto& [d, v] : a.coeffs_)
            if (d <= t && v != b.coeff(d)) return false;
        for (const auto& [d, v] : b.coeffs_)
            if (d <= t && v != a.coeff(d)) return false;
        return true;
    }

   private:
    std::map<int, Rational> coeffs_;
    int pole_bound_;
    int trunc_;
};

/// Laurent expansion of a rational function at z=0 through degree K.
inline LaurentSeries laurent_of_rational(const RationalFunction& rf, int K) {
    if (K < 0) throw std::invalid_argument("truncation order must be nonnegative");
    if (rf.is_zero()) return LaurentSeries::zero(K);
    int vn = rf.num().valuation();
    int vd = rf.den().valuation();
    int ord = vn - vd;  // leading degree of the expansion
    Polynomial n = rf.num().shifted_down(vn);
    Polynomial d = rf.den().shifted_down(vd);
    // power series division n/d to degree K - ord
    int len = K - ord + 1;
    if (len <= 0) return LaurentSeries::zero(K);
    std::vector<Rational> q(len, Rational(0));
    Rational d0 = d[0];
    for (int i = 0; i < len; ++i) {
        Rational acc = n[i];
        for (int j = 1; j <= i; ++j) acc -= d[j] * q[i - j];
        q[i] = acc / d0;
    }
    std::map<int, Rational> c;
    for (int i = 0; i < len; ++i)
        if (q[i] != 0) c[ord + i] = q[i];
    return LaurentSeries(std::move(c), ord < 0 ? -ord : 0, K);
}

}  // namespace symreg

#endif
