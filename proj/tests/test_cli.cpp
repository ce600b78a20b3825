#include <symreg/json_io.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace symreg;

TEST_CASE("rational json round trips") {
    CHECK(rational_from_json(to_json(Rational(-7, 3))) == Rational(-7, 3));
    CHECK(rational_from_json(json(5)) == Rational(5));
    CHECK(rational_from_json(json("2/6")) == Rational(1, 3));
    CHECK_THROWS_AS(rational_from_json(json::array()), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(json("1/0")), std::invalid_argument);
}

TEST_CASE("polynomial and rational function json") {
    Polynomial z = Polynomial::variable();
    Polynomial p = z * z + z.scaled(Rational(1, 2)) - Polynomial(Rational(3));
    CHECK(polynomial_from_json(to_json(p)) == p);
    CHECK_THROWS_AS(polynomial_from_json(json{{"x", 1}}), std::invalid_argument);

    RationalFunction f(p, z + Polynomial(Rational(2)));
    CHECK(rational_function_from_json(to_json(f)) == f);
    // bare scalars are accepted as constants
    CHECK(rational_function_from_json(json("3/4")) == RationalFunction(Rational(3, 4)));
    CHECK(rational_function_from_json(json(2)) == RationalFunction(Rational(2)));
    // missing denominator defaults to 1
    CHECK(rational_function_from_json(json{{"num", {"1", "1"}}}) ==
          RationalFunction(z + Polynomial(Rational(1))));
}

TEST_CASE("laurent series json") {
    LaurentSeries s({{-2, Rational(1, 3)}, {0, Rational(-4)}, {5, Rational(7, 2)}}, 2, 6);
    LaurentSeries back = laurent_from_json(to_json(s));
    CHECK(back == s);
    CHECK(back.trunc() == 6);
    CHECK(back.pole_bound() >= 2);

    LaurentSeries exact = LaurentSeries::monomial(-1, Rational(1));
    json j = to_json(exact);
    CHECK(j.at("trunc").is_null());
    CHECK(laurent_from_json(j).trunc() == LaurentSeries::kExact);
}

TEST_CASE("symbol json") {
    json term = {{"a", "-5/2"}, {"coeff", "1"}};
    json j = {{"dim", 1}, {"terms", json::array({term})}};
    LogSymbol s = symbol_from_json(j);
    CHECK(s == LogSymbol::power(1, Rational(-5, 2)));
    CHECK(s.omega_power() == 0);

    LogSymbol fam = riesz_family(LogSymbol::power(2, Rational(-2), Rational(3), 1), Rational(2));
    CHECK(symbol_from_json(to_json(fam)) == fam);
    CHECK(symbol_from_json(to_json(fam)).omega_power() == fam.omega_power());

    CHECK_THROWS_AS(symbol_from_json(json{{"dim", 1}}), json::exception);
    CHECK_THROWS_AS(symbol_from_json(json{{"dim", 0}, {"terms", json::array()}}),
                    std::invalid_argument);
}

TEST_CASE("word json") {
    TensorWord w({LogSymbol::power(1, Rational(-5, 2)), LogSymbol::power(1, Rational(-7, 2))});
    json arr = json::array();
    for (const auto& f : w.factors()) arr.push_back(to_json(f));
    TensorWord back = word_from_json(arr);
    REQUIRE(back.size() == 2);
    CHECK(back[0] == w[0]);
    CHECK(back[1] == w[1]);
    CHECK_THROWS_AS(word_from_json(json{{"not", "array"}}), std::invalid_argument);
}

TEST_CASE("json round trips are exact") {
    std::mt19937 rng(67);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 12), lp(0, 3), deg(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
        Rational r(num(rng), den(rng));
        CHECK(rational_from_json(to_json(r)) == r);

        std::vector<Rational> nc(deg(rng) + 1), dc(deg(rng) + 1);
        for (auto& c : nc) c = Rational(num(rng), den(rng));
        for (auto& c : dc) c = Rational(num(rng), den(rng));
        Polynomial d(dc);
        if (d.is_zero()) d = Polynomial(Rational(1));
        RationalFunction f(Polynomial(nc), d);
        CHECK(rational_function_from_json(to_json(f)) == f);

        LogSymbol s(1 + (trial % 3));
        s.add_term({Rational(num(rng), den(rng)), Rational(-den(rng))}, lp(rng), f);
        if (!s.is_zero()) CHECK(symbol_from_json(to_json(s)) == s);
    }
}
