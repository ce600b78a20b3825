#ifndef SYMREG_POLYNOMIAL_HPP
#define SYMREG_POLYNOMIAL_HPP

#include <symreg/rational.hpp>

#include <utility>
#include <vector>

namespace symreg {

/// Dense univariate polynomial over the rationals, coefficients in
/// ascending degree. The zero polynomial has an empty coefficient vector.
class Polynomial {
   public:
    Polynomial() = default;
    Polynomial(Rational c) {  // NOLINT: implicit from scalar is intended
        if (c != 0) coeffs_.push_back(std::move(c));
    }
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial variable() {
        return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& operator[](std::size_t i) const {
        static const Rational kZero(0);
        return i < coeffs_.size() ? coeffs_[i] : kZero;
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    const Rational& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    /// Multiplicity of the root z=0 (0 for nonzero constant term; 0 for zero poly).
    int valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return static_cast<int>(i);
        return 0;
    }

    Polynomial shifted_down(int k) const {  // divide by z^k, requires valuation >= k
        if (k == 0) return *this;
        if (valuation() < k && !is_zero())
            throw std::domain_error("shifted_down: not divisible by z^k");
        if (is_zero()) return {};
        return Polynomial(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
    }

    Rational evaluate(const Rational& z) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    template <typename S>
    S evaluate_at(const S& z) const {
        S acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * z + S(rat_to_double(*it));
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Rational> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(i);
        return Polynomial(std::move(d));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    Polynomial operator-() const {
        std::vector<Rational> c = coeffs_;
        for (auto& x : c) x = -x;
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(c));
    }
    Polynomial scaled(const Rational& s) const {
        if (s == 0) return {};
        std::vector<Rational> c = coeffs_;
        for (auto& x : c) x *= s;
        return Polynomial(std::move(c));
    }

    /// Euclidean division: returns {quotient, remainder}.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        Polynomial q, r = a;
        std::vector<Rational> qc(a.coeffs_.size(), Rational(0));
        while (!r.is_zero() && r.degree() >= b.degree()) {
            Rational c = r.leading() / b.leading();
            int d = r.degree() - b.degree();
            // r -= c z^d b
            std::vector<Rational> rc = r.coeffs_;
            for (std::size_t i = 0; i < b.coeffs_.size(); ++i) rc[i + d] -= c * b.coeffs_[i];
            qc[d] += c;
            r = Polynomial(std::move(rc));
        }
        return {Polynomial(std::move(qc)), r};
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0,0) = 0.
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a.scaled(Rational(1) / a.leading());
    return a;
}

}  // namespace symreg

#endif
