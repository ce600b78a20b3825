#ifndef SYMREG_RENORM_HPP
#define SYMREG_RENORM_HPP

#include <symreg/meromorphic.hpp>
#include <symreg/multi_laurent.hpp>

#include <unordered_map>

namespace symreg {

/// Tensor word of univariate germs, each in its own variable.
class GermWord {
   public:
    explicit GermWord(std::vector<LaurentSeries> factors) : factors_(std::move(factors)) {
        if (factors_.empty()) throw std::invalid_argument("germ word must be nonempty");
    }
    std::size_t size() const { return factors_.size(); }
    const LaurentSeries& operator[](std::size_t i) const { return factors_[i]; }
    const std::vector<LaurentSeries>& factors() const { return factors_; }

   private:
    std::vector<LaurentSeries> factors_;
};

inline GermWord germ_word_of(const TensorWord& w, int K) {
    std::vector<LaurentSeries> g;
    g.reserve(w.size());
    for (const auto& f : w.factors()) g.push_back(germ_of_integral(f, K).series);
    return GermWord(std::move(g));
}

namespace detail {

/// Memoized subset recursion shared by the preparation map and the Birkhoff
/// factor: counterterm(S) = -T(phi(S) + sum over proper nonempty J of S of
/// counterterm(J) * phi(S minus J)).
class SubsetRecursion {
   public:
    explicit SubsetRecursion(const GermWord& w) : w_(w) {}

    LaurentSeries phi(unsigned mask) const {
        LaurentSeries p;
        bool first = true;
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (mask & (1u << i)) {
                p = first ? w_[i] : p * w_[i];
                first = false;
            }
        if (first) throw std::logic_error("empty subset product");
        return p;
    }

    LaurentSeries prepared(unsigned mask) {
        LaurentSeries acc = phi(mask);
        for (unsigned j = (mask - 1) & mask; j != 0; j = (j - 1) & mask)
            acc = acc + counterterm(j) * phi(mask & ~j);
        return acc;
    }

    LaurentSeries counterterm(unsigned mask) {
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        LaurentSeries c = prepared(mask).pole_part().scaled(Rational(-1));
        memo_.emplace(mask, c);
        return c;
    }

   private:
    const GermWord& w_;
    std::unordered_map<unsigned, LaurentSeries> memo_;
};

inline unsigned full_mask(const GermWord& w) {
    if (w.size() > 16) throw std::invalid_argument("germ word too long for subset recursion");
    return (1u << w.size()) - 1u;
}

}  // namespace detail

/// The prepared series: diagonal product plus all proper counterterms.
inline LaurentSeries rbar(const GermWord& w) {
    detail::SubsetRecursion rec(w);
    return rec.prepared(detail::full_mask(w));
}

/// Minus the pole part of the prepared series of a subword.
inline LaurentSeries counterterm(const GermWord& w) {
    detail::SubsetRecursion rec(w);
    return rec.counterterm(detail::full_mask(w));
}

/// Pole-free series whose value at 0 is the product of the factor finite
/// parts.
inline LaurentSeries renormalise(const GermWord& w) {
    LaurentSeries prepared = rbar(w);
    LaurentSeries out = prepared + prepared.pole_part().scaled(Rational(-1));
    if (out.pole_order() != 0)
        throw std::logic_error("renormalise: nonzero pole part after subtraction");
    return out;
}

struct BirkhoffPair {
    LaurentSeries phi_minus;
    LaurentSeries phi_plus;
};

/// Bogoliubov recursion over the subset coproduct of the word.
inline BirkhoffPair birkhoff(const GermWord& w) {
    detail::SubsetRecursion rec(w);
    unsigned full = detail::full_mask(w);
    LaurentSeries minus = rec.counterterm(full);
    LaurentSeries plus = rec.prepared(full) + minus;
    return {minus, plus};
}

inline BirkhoffPair birkhoff(const TensorWord& w, int K) {
    return birkhoff(germ_word_of(w, K));
}

/// Sum of products of factor coefficients over nonzero index tuples summing
/// to zero; the defect between the diagonal finite part and the product of
/// finite parts.
inline Rational obstruction(const GermWord& w) {
    int pole_budget = 0;
    for (const auto& f : w.factors()) {
        pole_budget += f.pole_bound();
        if (f.trunc() < 0) throw truncation_error("obstruction: factor truncation too small");
    }
    for (const auto& f : w.factors())
        if (f.trunc() != LaurentSeries::kExact && f.trunc() < pole_budget)
            throw truncation_error("obstruction: truncation below the pole budget");
    Rational total(0);
    std::vector<std::size_t> pos(w.size(), 0);
    // enumerate one coefficient choice per factor via mixed-radix counting
    std::vector<std::vector<std::pair<int, Rational>>> entries(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (const auto& [d, v] : w[i].coeffs()) entries[i].push_back({d, v});
        if (entries[i].empty()) return Rational(0);
    }
    while (true) {
        int degsum = 0;
        bool all_zero = true;
        Rational prod(1);
        for (std::size_t i = 0; i < w.size(); ++i) {
            degsum += entries[i][pos[i]].first;
            if (entries[i][pos[i]].first != 0) all_zero = false;
            prod *= entries[i][pos[i]].second;
        }
        if (degsum == 0 && !all_zero) total += prod;
        std::size_t i = 0;
        while (i < w.size() && ++pos[i] == entries[i].size()) pos[i++] = 0;
        if (i == w.size()) break;
    }
    return total;
}

inline Rational obstruction(const TensorWord& w, int K) {
    return obstruction(germ_word_of(w, K));
}

namespace detail {

inline MultiLaurent scaled_ml(const MultiLaurent& g, const Rational& s) {
    MultiLaurent r(g.nvars(), g.pole_bounds(), g.trunc());
    for (const auto& [e, v] : g.coeffs()) r.set(e, v * s);
    return r;
}

/// General multivariate recursion: merges the index set S of f into one
/// distinguished variable (index 0 of the result), adding counterterms of
/// all proper nonempty subsets with their leftover variables also set to
/// the distinguished one.
class MultiRecursion {
   public:
    explicit MultiRecursion(const MultiLaurent& f) : f_(f) {
        if (f_.nvars() > 16) throw std::invalid_argument("too many variables");
    }

    MultiLaurent prepared(unsigned S) {
        MultiLaurent acc = merge(f_, S);
        for (unsigned j = (S - 1) & S; j != 0; j = (j - 1) & S)
            acc = acc + merge_leftover(counterterm(j), j, S);
        return acc;
    }

    MultiLaurent counterterm(unsigned S) {
        auto it = memo_.find(S);
        if (it != memo_.end()) return it->second;
        MultiLaurent c = scaled_ml(pole_part_var0(prepared(S)), Rational(-1));
        memo_.emplace(S, c);
        return c;
    }

   private:
    // restrict_vars with S given as a bitmask over the original indices
    MultiLaurent merge(const MultiLaurent& g, unsigned S) const {
        std::vector<int> J;
        for (int i = 0; i < f_.nvars(); ++i)
            if (S & (1u << i)) J.push_back(i);
        return g.restrict_vars(J);
    }

    /// g lives in variables {z} + (original indices not in J); folds the
    /// variables of S\J into z, yielding {z} + (original indices not in S).
    MultiLaurent merge_leftover(const MultiLaurent& g, unsigned J, unsigned S) const {
        std::vector<int> fold{0};
        int pos = 1;
        for (int i = 0; i < f_.nvars(); ++i) {
            if (J & (1u << i)) continue;
            if (S & (1u << i)) fold.push_back(pos);
            ++pos;
        }
        return g.restrict_vars(fold);
    }

    static MultiLaurent pole_part_var0(const MultiLaurent& g) {
        MultiLaurent r(g.nvars(), g.pole_bounds(), g.trunc());
        for (const auto& [e, v] : g.coeffs())
            if (e[0] < 0) r.set(e, v);
        return r;
    }

    const MultiLaurent& f_;
    std::unordered_map<unsigned, MultiLaurent> memo_;
};

}  // namespace detail

/// Prepared series of a general multivariate germ (variable 0 of the result
/// is the diagonal variable).
inline LaurentSeries rbar(const MultiLaurent& f) {
    detail::MultiRecursion rec(f);
    MultiLaurent p = rec.prepared((1u << f.nvars()) - 1u);
    return p.diagonal();
}

/// Holomorphic renormalised series of a general multivariate germ; its value
/// at 0 is the multivariate constant term.
inline LaurentSeries renormalise(const MultiLaurent& f) {
    LaurentSeries prepared = rbar(f);
    LaurentSeries out = prepared + prepared.pole_part().scaled(Rational(-1));
    if (out.pole_order() != 0)
        throw std::logic_error("renormalise: nonzero pole part after subtraction");
    return out;
}

}  // namespace symreg

#endif
