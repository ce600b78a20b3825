#ifndef SYMREG_MULTI_LAURENT_HPP
#define SYMREG_MULTI_LAURENT_HPP

#include <symreg/laurent.hpp>

#include <numeric>
#include <vector>

namespace symreg {

/// Truncated Laurent series in several variables with per-variable pole
/// bounds and a total-degree truncation order.
class MultiLaurent {
   public:
    using Exps = std::vector<int>;

    MultiLaurent(int nvars, std::vector<int> pole_bounds, int trunc)
        : nvars_(nvars), pole_bounds_(std::move(pole_bounds)), trunc_(trunc) {
        if (nvars_ <= 0) throw std::invalid_argument("multi laurent needs at least one variable");
        if (static_cast<int>(pole_bounds_.size()) != nvars_)
            throw std::invalid_argument("pole bound count mismatch");
    }

    int nvars() const { return nvars_; }
    int trunc() const { return trunc_; }
    const std::vector<int>& pole_bounds() const { return pole_bounds_; }
    const std::map<Exps, Rational>& coeffs() const { return coeffs_; }

    void set(const Exps& e, Rational v) {
        check_key(e);
        if (v == 0)
            coeffs_.erase(e);
        else
            coeffs_[e] = std::move(v);
    }
    void add(const Exps& e, const Rational& v) {
        check_key(e);
        auto& slot = coeffs_[e];
        slot += v;
        if (slot == 0) coeffs_.erase(e);
    }
    Rational coeff(const Exps& e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coeff(Exps(nvars_, 0)); }

    friend MultiLaurent operator+(const MultiLaurent& a, const MultiLaurent& b) {
        if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
        std::vector<int> pb(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) pb[i] = std::max(a.pole_bounds_[i], b.pole_bounds_[i]);
        MultiLaurent r(a.nvars_, pb, std::min(a.trunc_, b.trunc_));
        for (const auto& [e, v] : a.coeffs_) r.add(e, v);
        for (const auto& [e, v] : b.coeffs_) r.add(e, v);
        return r;
    }

    friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
        if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
        std::vector<int> pb(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) pb[i] = a.pole_bounds_[i] + b.pole_bounds_[i];
        int pa = std::accumulate(a.pole_bounds_.begin(), a.pole_bounds_.end(), 0);
        int pbtot = std::accumulate(b.pole_bounds_.begin(), b.pole_bounds_.end(), 0);
        int t = std::min(a.trunc_ - pbtot, b.trunc_ - pa);
        if (t < 0) throw truncation_error("multi laurent product: truncation exhausted");
        MultiLaurent r(a.nvars_, pb, t);
        for (const auto& [ea, va] : a.coeffs_)
            for (const auto& [eb, vb] : b.coeffs_) {
                Exps e(a.nvars_);
                int total = 0;
                for (int i = 0; i < a.nvars_; ++i) {
                    e[i] = ea[i] + eb[i];
                    total += e[i];
                }
                if (total <= t) r.add(e, va * vb);
            }
        return r;
    }

    /// Identifies the variables indexed by J (0-based) to a single fresh
    /// variable which becomes index 0 of the result; remaining variables
    /// follow in their original order.
    MultiLaurent restrict_vars(const std::vector<int>& J) const {
        if (J.empty()) throw std::invalid_argument("restrict_vars: empty index set");
        std::vector<bool> in(nvars_, false);
        for (int j : J) {
            if (j < 0 || j >= nvars_ || in[j])
                throw std::invalid_argument("restrict_vars: bad index set");
            in[j] = true;
        }
        int merged_pb = 0;
        std::vector<int> pb{0};
        for (int i = 0; i < nvars_; ++i)
            if (in[i])
                merged_pb += pole_bounds_[i];
            else
                pb.push_back(pole_bounds_[i]);
        pb[0] = merged_pb;
        MultiLaurent r(static_cast<int>(pb.size()), pb, trunc_);
        for (const auto& [e, v] : coeffs_) {
            Exps ne{0};
            for (int i = 0; i < nvars_; ++i)
                if (in[i])
                    ne[0] += e[i];
                else
                    ne.push_back(e[i]);
            r.add(ne, v);
        }
        return r;
    }

    /// Sets every variable equal to z.
    LaurentSeries diagonal() const {
        std::map<int, Rational> c;
        for (const auto& [e, v] : coeffs_) {
            int d = std::accumulate(e.begin(), e.end(), 0);
            c[d] += v;
        }
        for (auto it = c.begin(); it != c.end();)
            it = it->second == 0 ? c.erase(it) : std::next(it);
        int pb = std::accumulate(pole_bounds_.begin(), pole_bounds_.end(), 0);
        return LaurentSeries(std::move(c), pb, trunc_);
    }

    /// Embeds a univariate series as variable `var` of an nvars-variate germ.
    static MultiLaurent from_univariate(const LaurentSeries& s, int nvars, int var, int trunc) {
        std::vector<int> pb(nvars, 0);
        pb[var] = s.pole_bound();
        MultiLaurent r(nvars, pb, std::min(trunc, s.trunc()));
        for (const auto& [d, v] : s.coeffs()) {
            Exps e(nvars, 0);
            e[var] = d;
            if (d <= r.trunc_) r.add(e, v);
        }
        return r;
    }

    friend bool operator==(const MultiLaurent& a, const MultiLaurent& b) {
        if (a.nvars_ != b.nvars_) return false;
        int t = std::min(a.trunc_, b.trunc_);
        auto within = [t](const Exps& e) {
            return std::accumulate(e.begin(), e.end(), 0) <= t;
        };
        for (const auto& [e, v] : a.coeffs_)
            if (within(e) && v != b.coeff(e)) return false;
        for (const auto& [e, v] : b.coeffs_)
            if (within(e) && v != a.coeff(e)) return false;
        return true;
    }

   private:
    void check_key(const Exps& e) const {
        if (static_cast<int>(e.size()) != nvars_)
            throw std::invalid_argument("exponent vector length mismatch");
        int total = 0;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] < -pole_bounds_[i])
                throw truncation_error("multi laurent: exponent below declared pole bound");
            total += e[i];
        }
        if (total > trunc_)
            throw truncation_error("multi laurent: exponent above truncation order");
    }

    int nvars_;
    std::vector<int> pole_bounds_;
    int trunc_;
    std::map<Exps, Rational> coeffs_;
};

}  // namespace symreg

#endif
