#ifndef SYMREG_RATIONAL_FUNCTION_HPP
#define SYMREG_RATIONAL_FUNCTION_HPP

#include <symreg/polynomial.hpp>

#include <complex>

namespace symreg {

/// Reduced fraction of polynomials in one formal variable z; the
/// denominator is monic and coprime to the numerator.
class RationalFunction {
   public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(Rational c) : num_(std::move(c)), den_(Rational(1)) {}  // NOLINT
    RationalFunction(long c) : num_(Rational(c)), den_(Rational(1)) {}       // NOLINT
    RationalFunction(Polynomial num, Polynomial den = Polynomial(Rational(1)))
        : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        reduce();
    }

    static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    /// Requires is_constant().
    Rational constant_value() const {
        if (!is_constant()) throw std::domain_error("rational function is not constant");
        return num_[0] / den_[0];
    }

    Rational evaluate(const Rational& z) const {
        Rational d = den_.evaluate(z);
        if (d == 0) throw std::domain_error("rational function evaluated at a pole");
        return num_.evaluate(z) / d;
    }

    template <typename S>
    S evaluate_at(const S& z) const {
        return num_.template evaluate_at<S>(z) / den_.template evaluate_at<S>(z);
    }

    RationalFunction derivative() const {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    /// Order of vanishing at z=0: valuation(num) - valuation(den); 0 for the zero function.
    int order_at_zero() const {
        if (is_zero()) return 0;
        return num_.valuation() - den_.valuation();
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("division by the zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;  // canonical form
    }

   private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Polynomial(Rational(1));
            return;
        }
        Polynomial g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        Rational lc = den_.leading();
        if (lc != 1) {
            Rational inv = Rational(1) / lc;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }
    Polynomial num_, den_;
};

}  // namespace symreg

#endif
