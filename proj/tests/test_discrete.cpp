#include <symreg/discrete.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>

using namespace symreg;

namespace {

constexpr double kZeta2 = 1.6449340668482264;
constexpr double kZeta3 = 1.2020569031595943;
constexpr double kZeta5 = 1.0369277551433699;
constexpr double kZeta32 = 0.2288103976033537;   // zeta(3,2)
constexpr double kZeta23 = 0.7115661975505724;   // zeta(2,3)
constexpr double kGamma = 0.5772156649015329;
const double kPi2Over3 = M_PI * M_PI / 3.0;
const double kPi4Over45 = std::pow(M_PI, 4) / 45.0;

}  // namespace

TEST_CASE("tail integrals of power-log terms") {
    CHECK(power_log_tail(-2.0, 0, 10.0) == Catch::Approx(0.1));
    CHECK(power_log_tail(-2.0, 1, 10.0) == Catch::Approx((std::log(10.0) + 1.0) / 10.0));
    CHECK_THROWS_AS(power_log_tail(-0.5, 0, 10.0), em_depth_error);
    CHECK_THROWS_AS(power_log_tail(-1.0, 0, 10.0), em_depth_error);

    NumSymbol<double> f;
    f.add(-2.0, 0, 3.0);
    f.add(-3.0, 1, -2.0);
    CHECK(abs_tail(f, 5.0) ==
          Catch::Approx(3.0 * power_log_tail(-2.0, 0, 5.0) + 2.0 * power_log_tail(-3.0, 1, 5.0)));
}

TEST_CASE("summation interpolants track the symmetric partial sums") {
    LogSymbol sigma = LogSymbol::power(1, Rational(-2));
    EMInterpolant em = em_interpolant(sigma, 3);
    for (long N : {10L, 100L}) {
        double direct = discrete_p(sigma, N);
        double slack = em.remainder_bound(static_cast<double>(N)) + em.constant_err + 1e-12;
        CHECK(std::abs(direct - em.evaluate_at(static_cast<double>(N))) <= slack);
    }

    CHECK_THROWS_AS(em_interpolant(LogSymbol::power(2, Rational(-2)), 3), std::invalid_argument);
    CHECK_THROWS_AS(
        em_interpolant(riesz_family(LogSymbol::power(1, Rational(-2)), Rational(1)), 3),
        std::invalid_argument);
    CHECK_THROWS_AS(em_interpolant(sigma, 0), std::invalid_argument);
}

TEST_CASE("finite parts of lattice sums") {
    CHECK(cutoff_sum(LogSymbol::power(1, Rational(-2))).value == Catch::Approx(kPi2Over3));
    CHECK(cutoff_sum(LogSymbol::power(1, Rational(-4))).value == Catch::Approx(kPi4Over45));
    CHECK(cutoff_sum(LogSymbol::zero(1)).value == 0.0);

    // harmonic symbol: the finite part is twice Euler's constant
    NumericResult h = cutoff_sum(LogSymbol::power(1, Rational(-1)));
    CHECK(std::abs(h.value - 2 * kGamma) < 1e-10);
    // independent oracle: 2 sum_{j<=N} 1/j - 2 log N -> 2 gamma like 1/N
    double acc = 0;
    long N = 2000000;
    for (long j = 1; j <= N; ++j) acc += 1.0 / j;
    CHECK(std::abs(h.value - (2 * acc - 2 * std::log(static_cast<double>(N)))) < 1e-5);
}

TEST_CASE("continued lattice zeta function") {
    LogSymbol one = LogSymbol::power(1, Rational(0));
    ComplexResult z2 = cutoff_sum_family(one, Rational(1), {2.0, 0.0});
    CHECK(std::abs(z2.value - std::complex<double>(kPi2Over3, 0)) < 1e-10);
    CHECK(z2.error_bound < 1e-10);

    ComplexResult z0 = cutoff_sum_family(one, Rational(1), {0.0, 0.0});
    CHECK(std::abs(z0.value - std::complex<double>(-1.0, 0)) < 1e-8);
    ComplexResult zm1 = cutoff_sum_family(one, Rational(1), {-1.0, 0.0});
    CHECK(std::abs(zm1.value - std::complex<double>(-1.0 / 6.0, 0)) < 1e-8);
    // depth stability at the continued point
    ComplexResult zm1d = cutoff_sum_family(one, Rational(1), {-1.0, 0.0}, 6);
    CHECK(std::abs(zm1.value - zm1d.value) < 1e-8);

    // Schwarz reflection as an oracle off the real axis
    ComplexResult plus = cutoff_sum_family(one, Rational(1), {2.5, 1.0});
    ComplexResult minus = cutoff_sum_family(one, Rational(1), {2.5, -1.0});
    CHECK(std::abs(plus.value - std::conj(minus.value)) <
          1e-10 + plus.error_bound + minus.error_bound);
}

TEST_CASE("pole proximity of summation exponents") {
    NumSymbol<double> close;
    close.add(-1.0 + 1e-10, 0, 1.0);
    CHECK_THROWS_AS(em_closed(close, 2), std::domain_error);

    NumSymbol<double> critical;
    critical.add(-1.0 + 1e-13, 0, 1.0);  // treated as the log case
    CHECK_NOTHROW(em_closed(critical, 2));
}

TEST_CASE("discrete summation operators") {
    LogSymbol sigma = LogSymbol::power(1, Rational(-2));
    CHECK(discrete_p(sigma, 2) == Catch::Approx(2.5));
    CHECK(discrete_p(sigma, 0) == 0.0);

    auto f = [](long m) { return 1.0 / (m * m + 1.0); };
    CHECK(discrete_p(f, 1) == Catch::Approx(2.0));
    CHECK(weak_p(f, 5) - strict_p(f, 5) == Catch::Approx(f(5)));

    // one-sided identities: strict has weight +1, weak has weight -1
    auto g = [](long m) { return 1.0 / (m * (m + 1.0)); };
    for (long n : {1L, 7L, 23L}) {
        auto Qsf = [&](long m) { return strict_p(f, m); };
        auto Qsg = [&](long m) { return strict_p(g, m); };
        double lhs = Qsf(n) * Qsg(n);
        double rhs = strict_p([&](long m) { return f(m) * Qsg(m); }, n) +
                     strict_p([&](long m) { return g(m) * Qsf(m); }, n) +
                     strict_p([&](long m) { return f(m) * g(m); }, n);
        CHECK(lhs == Catch::Approx(rhs).margin(1e-13));

        auto Qwf = [&](long m) { return weak_p(f, m); };
        auto Qwg = [&](long m) { return weak_p(g, m); };
        double wl = Qwf(n) * Qwg(n);
        double wr = weak_p([&](long m) { return f(m) * Qwg(m); }, n) +
                    weak_p([&](long m) { return g(m) * Qwf(m); }, n) -
                    weak_p([&](long m) { return f(m) * g(m); }, n);
        CHECK(wl == Catch::Approx(wr).margin(1e-13));
    }

    // symmetric operator on even summands vanishing at 0: diagonal pairs
    // |m| = |m'| are double counted, so the correction enters twice
    auto fe = [](long m) { return m == 0 ? 0.0 : 1.0 / static_cast<double>(m * m); };
    auto ge = [](long m) { return m == 0 ? 0.0 : 1.0 / (m * m + std::abs((double)m)); };
    for (long n : {1L, 5L, 19L}) {
        auto Pf = [&](long m) { return discrete_p(fe, std::labs(m)); };
        auto Pg = [&](long m) { return discrete_p(ge, std::labs(m)); };
        double lhs = Pf(n) * Pg(n);
        double rhs = discrete_p([&](long m) { return fe(m) * Pg(m); }, n) +
                     discrete_p([&](long m) { return ge(m) * Pf(m); }, n) -
                     2.0 * discrete_p([&](long m) { return fe(m) * ge(m); }, n);
        CHECK(lhs == Catch::Approx(rhs).margin(1e-13));
    }
}

TEST_CASE("nested lattice sums") {
    NumSymbol<double> s2, s1, s3;
    s2.add(-2.0, 0, 1.0);
    s1.add(-1.0, 0, 1.0);
    s3.add(-3.0, 0, 1.0);

    NumericResult z2 = nested_sum({s2}, true, 3);
    CHECK(std::abs(z2.value - kZeta2) < 1e-10);
    CHECK(z2.error_bound < 1e-10);

    NumericResult z21 = nested_sum({s2, s1}, true, 3);
    CHECK(std::abs(z21.value - kZeta3) < 1e-8);  // Euler's identity

    CHECK_THROWS_AS(nested_sum({s1}, true), std::domain_error);
    CHECK_THROWS_AS(nested_sum({s1, s2}, true), std::domain_error);
    CHECK_THROWS_AS(nested_sum({}, true), std::invalid_argument);
}

TEST_CASE("multiple zeta values") {
    NumericResult z2 = mzv({{2.0}, true, 1e-9});
    CHECK(std::abs(z2.value - kZeta2) < 1e-9);
    CHECK(z2.error_bound < 1e-9);
    CHECK(std::abs(mzv({{2.0, 1.0}, true, 1e-9}).value - kZeta3) < 1e-9);

    NumericResult z32 = mzv({{3.0, 2.0}, true, 1e-9});
    // brute-force double sum with a certified tail bound
    double brute = 0, cum = 0;
    long N = 40000;
    for (long a = 1; a <= N; ++a) {
        if (a > 1) brute += cum / (static_cast<double>(a) * a * a);
        cum += 1.0 / (static_cast<double>(a) * a);
    }
    double tail = kZeta2 / (2.0 * N * N);
    CHECK(std::abs(z32.value - brute) < 3e-9 + tail);
    CHECK(std::abs(z32.value - kZeta32) < 1e-9);

    // weak sums split off the diagonal
    NumericResult weak23 = mzv({{2.0, 3.0}, false, 1e-9});
    CHECK(std::abs(weak23.value - (kZeta23 + kZeta5)) < 1e-9);

    CHECK_THROWS_AS(mzv({{}, true, 1e-9}), std::invalid_argument);
    CHECK_THROWS_AS(mzv({{2.0}, true, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(mzv({{1.0, 2.0}, true, 1e-9}), std::domain_error);
    CHECK_THROWS_AS(mzv({{2.0, 0.5}, true, 1e-9}), std::domain_error);
}

TEST_CASE("discrete chen sums over the lattice") {
    TensorWord w({LogSymbol::power(1, Rational(-2)), LogSymbol::power(1, Rational(-3))});
    NumericResult weak = discrete_chen_sum(w);
    CHECK(std::abs(weak.value - 4.0 * (kZeta23 + kZeta5)) < 1e-8);
    NumericResult viamzv = mzv({{2.0, 3.0}, false, 1e-9});
    CHECK(std::abs(weak.value - 4.0 * viamzv.value) <
          weak.error_bound + 4.0 * viamzv.error_bound + 1e-10);

    NumericResult strict = discrete_chen_sum(w, 5, 40, true);
    CHECK(std::abs(strict.value - 4.0 * kZeta23) < 1e-8);

    TensorWord single({LogSymbol::power(1, Rational(-2))});
    CHECK(std::abs(discrete_chen_sum(single).value - kPi2Over3) < 1e-10);

    TensorWord zero({LogSymbol::power(1, Rational(-2)), LogSymbol::zero(1)});
    CHECK(discrete_chen_sum(zero).value == 0.0);

    TensorWord bad({LogSymbol::power(2, Rational(-3))});
    CHECK_THROWS_AS(discrete_chen_sum(bad), std::invalid_argument);
}

TEST_CASE("mixable shuffles") {
    // multinomial count over the number of merged slots
    auto count = [](int k, int l) {
        double total = 0;
        for (int m = 0; m <= std::min(k, l); ++m) {
            double v = 1;
            for (int i = 1; i <= k + l - m; ++i) v *= i;
            for (int i = 1; i <= m; ++i) v /= i;
            for (int i = 1; i <= k - m; ++i) v /= i;
            for (int i = 1; i <= l - m; ++i) v /= i;
            total += v;
        }
        return static_cast<std::size_t>(total + 0.5);
    };
    CHECK(mixable_shuffles(1, 1).size() == 3);
    CHECK(mixable_shuffles(2, 1).size() == 5);
    CHECK(mixable_shuffles(2, 2).size() == 13);
    CHECK(mixable_shuffles(3, 2).size() == 25);
    // Delannoy recurrence D(k,l) = D(k-1,l) + D(k,l-1) + D(k-1,l-1)
    auto D = [&](int k, int l) {
        return k == 0 || l == 0 ? std::size_t(1) : mixable_shuffles(k, l).size();
    };
    for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
            CHECK(D(k, l) == count(k, l));
            CHECK(D(k, l) == D(k - 1, l) + D(k, l - 1) +
                                 (k > 1 && l > 1 ? D(k - 1, l - 1) : std::size_t(1)));
        }

    for (const MixPattern& pat : mixable_shuffles(3, 2)) {
        int li = -1, ri = -1, lseen = 0, rseen = 0;
        for (const auto& [i, j] : pat) {
            if (i >= 0) {
                CHECK(i > li);
                li = i;
                ++lseen;
            }
            if (j >= 0) {
                CHECK(j > ri);
                ri = j;
                ++rseen;
            }
        }
        CHECK(lseen == 3);
        CHECK(rseen == 2);
    }

    CHECK_THROWS_AS(mixable_shuffles(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(mixable_shuffles(5, 4), std::invalid_argument);
}

TEST_CASE("quasi-shuffle products of zeta values") {
    StuffleReport r23 = verify_stuffle({2.0}, {3.0}, 1e-8);
    CHECK(r23.pass);
    CHECK(r23.lhs == Catch::Approx(kZeta2 * kZeta3));
    CHECK(r23.rhs == Catch::Approx(kZeta23 + kZeta32 + kZeta5));

    // zeta(2)^2 = 2 zeta(2,2) + zeta(4)
    StuffleReport r22 = verify_stuffle({2.0}, {2.0}, 1e-8);
    CHECK(r22.pass);
    CHECK(r22.residual < 1e-8);

    StuffleReport tight = verify_stuffle({2.0}, {3.0}, 1e-30);
    CHECK_FALSE(tight.pass);
}
