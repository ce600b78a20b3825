#include <symreg/symbol.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace symreg;

namespace {

LogSymbol random_symbol(std::mt19937& rng, int dim) {
    std::uniform_int_distribution<int> nterms(1, 3), lp(0, 2), num(-12, 4), den(1, 3);
    LogSymbol s(dim);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i)
        s.add_term({Rational(num(rng), den(rng)), Rational(0)}, lp(rng),
                   RationalFunction(Rational(num(rng))));
    if (s.is_zero()) s.add_term({Rational(-2), Rational(0)}, 0, RationalFunction(Rational(1)));
    return s;
}

}  // namespace

TEST_CASE("term maps merge and cancel") {
    LogSymbol s(1);
    s.add_term({Rational(-1), Rational(0)}, 0, RationalFunction(Rational(2)));
    s.add_term({Rational(-1), Rational(0)}, 0, RationalFunction(Rational(3)));
    CHECK(s.coeff({Rational(-1), Rational(0)}, 0).constant_value() == 5);
    s.add_term({Rational(-1), Rational(0)}, 0, RationalFunction(Rational(-5)));
    CHECK(s.is_zero());
    CHECK_THROWS_AS(LogSymbol(0), std::invalid_argument);
    CHECK_THROWS_AS(s.add_term({Rational(0), Rational(0)}, -1, RationalFunction(Rational(1))),
                    std::invalid_argument);
}

TEST_CASE("addition and subtraction respect dimension and omega grading") {
    LogSymbol a = LogSymbol::power(2, Rational(-3));
    LogSymbol b = LogSymbol::power(2, Rational(-3), Rational(-1));
    CHECK(sym_add(a, b).is_zero());
    CHECK(sym_sub(a, a).is_zero());
    CHECK_THROWS_AS(sym_add(a, LogSymbol::power(1, Rational(-3))), std::invalid_argument);
    CHECK_THROWS_AS(sym_add(a, a.with_omega_power(1)), std::invalid_argument);
}

TEST_CASE("products add exponents, log powers, and omega powers") {
    LogSymbol a = LogSymbol::power(1, Rational(-1), Rational(1), 1);
    LogSymbol b = LogSymbol::power(1, Rational(-2));
    LogSymbol p = sym_mul(a, b);
    CHECK(p.coeff({Rational(-3), Rational(0)}, 1).constant_value() == 1);
    CHECK(sym_mul(LogSymbol::power(1, Rational(-1), Rational(2)),
                  LogSymbol::power(1, Rational(-1), Rational(3)))
              .coeff({Rational(-2), Rational(0)}, 0)
              .constant_value() == 6);
    CHECK(sym_mul(a, LogSymbol::one(1)) == a);
    CHECK(sym_mul(a.with_omega_power(2), b.with_omega_power(1)).omega_power() == 3);

    std::mt19937 rng(3);
    for (int i = 0; i < 25; ++i) {
        LogSymbol x = random_symbol(rng, 2), y = random_symbol(rng, 2), z = random_symbol(rng, 2);
        CHECK(sym_mul(x, y) == sym_mul(y, x));
        CHECK(sym_mul(sym_mul(x, y), z) == sym_mul(x, sym_mul(y, z)));
    }
}

TEST_CASE("orders") {
    CHECK(order(LogSymbol::power(1, Rational(-5, 2))).a == Rational(-5, 2));
    LogSymbol two = sym_add(LogSymbol::power(1, Rational(-1)), LogSymbol::power(1, Rational(-3)));
    CHECK(order(two).a == Rational(-1));
    CHECK_THROWS_AS(order(LogSymbol::zero(1)), std::domain_error);

    LogSymbol fam = riesz_family(LogSymbol::power(1, Rational(-1)), Rational(1));
    CHECK(order(fam).a == Rational(-1));
    CHECK(order(fam).b == Rational(-1));

    // same constant part, different slopes: generically incomparable
    LogSymbol mixed(1);
    mixed.add_term({Rational(-1), Rational(1)}, 0, RationalFunction(Rational(1)));
    mixed.add_term({Rational(-1), Rational(2)}, 0, RationalFunction(Rational(1)));
    CHECK(order_set(mixed).size() == 2);
    CHECK_THROWS_AS(order(mixed), std::domain_error);
    CHECK_THROWS_AS(mixed.slope(), std::domain_error);
}

TEST_CASE("residue read-off") {
    CHECK(wodzicki_residue(LogSymbol::power(3, Rational(-3), Rational(5))).constant_value() == 5);
    LogSymbol s = LogSymbol::power(1, Rational(-1), Rational(1), 1);
    CHECK(wodzicki_residue(s, 0).is_zero());
    CHECK(wodzicki_residue(s, 1).constant_value() == 1);
    CHECK(wodzicki_residue(LogSymbol::power(1, Rational(-5, 2))).is_zero());

    std::mt19937 rng(5);
    for (int i = 0; i < 20; ++i) {
        LogSymbol x = random_symbol(rng, 2), y = random_symbol(rng, 2);
        CHECK(wodzicki_residue(sym_add(x, y), 1) ==
              wodzicki_residue(x, 1) + wodzicki_residue(y, 1));
    }
}

TEST_CASE("radial derivative") {
    LogSymbol s = LogSymbol::power(1, Rational(-2), Rational(1), 1);  // r^-2 log r
    LogSymbol d = d_radial(s);
    CHECK(d.coeff({Rational(-3), Rational(0)}, 1).constant_value() == -2);
    CHECK(d.coeff({Rational(-3), Rational(0)}, 0).constant_value() == 1);
    CHECK(d_radial(LogSymbol::one(1)).is_zero());
    CHECK(d_radial(LogSymbol::power(1, Rational(-1)))
              .coeff({Rational(-2), Rational(0)}, 0)
              .constant_value() == -1);
    CHECK_THROWS_AS(d_radial(LogSymbol::power(2, Rational(-1))), std::invalid_argument);
    CHECK_THROWS_AS(d_radial(riesz_family(LogSymbol::power(1, Rational(-1)), Rational(1))),
                    std::invalid_argument);
}

TEST_CASE("parameter derivative") {
    LogSymbol fam = riesz_family(LogSymbol::power(1, Rational(-1)), Rational(1));
    LogSymbol d = d_param(fam);  // -log * family
    CHECK(d.coeff({Rational(-1), Rational(-1)}, 1).constant_value() == -1);
    CHECK(d.coeff({Rational(-1), Rational(-1)}, 0).is_zero());
    CHECK(d_param(LogSymbol::power(1, Rational(-2), Rational(3), 1)).is_zero());

    Polynomial z = Polynomial::variable();
    RationalFunction c(Polynomial(Rational(1)), Polynomial(Rational(1)) - z);  // 1/(1-z)
    LogSymbol g = LogSymbol::monomial(1, Rational(0), Rational(-1), 0, c);
    LogSymbol dg = d_param(g);
    RationalFunction csq(Polynomial(Rational(1)),
                         (Polynomial(Rational(1)) - z) * (Polynomial(Rational(1)) - z));
    CHECK(dg.coeff({Rational(0), Rational(-1)}, 0) == csq);
    CHECK(dg.coeff({Rational(0), Rational(-1)}, 1) == -c);

    // a Riesz family with constant coefficient gains exactly one log per derivative
    LogSymbol f2 = riesz_family(LogSymbol::power(1, Rational(-3), Rational(2), 1), Rational(2));
    CHECK(f2.max_logpow() == 1);
    CHECK(d_param(f2).max_logpow() == 2);
    CHECK(d_param(d_param(f2)).max_logpow() == 3);
}

TEST_CASE("specialisation and log slices") {
    LogSymbol fam = riesz_family(LogSymbol::power(1, Rational(-1)), Rational(2));
    LogSymbol at1 = specialise(fam, Rational(1));
    CHECK(at1.coeff({Rational(-3), Rational(0)}, 0).constant_value() == 1);
    CHECK(specialise(fam, Rational(0)) == LogSymbol::power(1, Rational(-1)));

    LogSymbol s = sym_add(LogSymbol::power(1, Rational(-1), Rational(2), 2),
                          LogSymbol::power(1, Rational(-2), Rational(3), 0));
    CHECK(log_slice(s, 2).coeff({Rational(-1), Rational(0)}, 0).constant_value() == 2);
    CHECK(log_slice(s, 0).coeff({Rational(-2), Rational(0)}, 0).constant_value() == 3);
    CHECK(log_slice(s, 1).is_zero());
}

TEST_CASE("riesz deformation") {
    LogSymbol fam = riesz_family(LogSymbol::power(2, Rational(-2)), Rational(1));
    CHECK(fam.coeff({Rational(-2), Rational(-1)}, 0).constant_value() == 1);
    CHECK(fam.slope() == Rational(-1));
    CHECK_THROWS_AS(riesz_family(LogSymbol::power(1, Rational(-1)), Rational(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(riesz_family(fam, Rational(1)), std::invalid_argument);
    Polynomial z = Polynomial::variable();
    CHECK_THROWS_AS(
        riesz_family(LogSymbol::power(1, Rational(-1)), Rational(1), RationalFunction(z)),
        std::invalid_argument);
    LogSymbol twisted = riesz_family(LogSymbol::power(1, Rational(-1)), Rational(1),
                                     RationalFunction(Polynomial(Rational(1)) + z));
    CHECK(twisted.coeff({Rational(-1), Rational(-1)}, 0) ==
          RationalFunction(Polynomial(Rational(1)) + z));
}

TEST_CASE("omega substitution") {
    LogSymbol s = LogSymbol::power(1, Rational(-2)).with_omega_power(2);
    LogSymbol sub = substitute_omega(s, Rational(2));
    CHECK(sub.omega_power() == 0);
    CHECK(sub.coeff({Rational(-2), Rational(0)}, 0).constant_value() == 4);
}

TEST_CASE("numeric evaluation") {
    LogSymbol s = LogSymbol::power(1, Rational(-2));
    CHECK(evaluate(s, 2.0) == Catch::Approx(0.25));
    CHECK(evaluate(s, 0.5) == 0.0);
    LogSymbol fam = riesz_family(LogSymbol::power(1, Rational(-1)), Rational(1));
    CHECK(evaluate(fam, std::exp(1.0), 1.0) == Catch::Approx(std::exp(-2.0)));
    LogSymbol o = LogSymbol::power(1, Rational(-1)).with_omega_power(1);
    CHECK(evaluate(o, 2.0, 0.0, 2.0) == Catch::Approx(1.0));
    // log powers
    LogSymbol l = LogSymbol::power(1, Rational(-1), Rational(3), 2);
    CHECK(evaluate(l, 5.0) ==
          Catch::Approx(3.0 / 5.0 * std::log(5.0) * std::log(5.0)));
}
