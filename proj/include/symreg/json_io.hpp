#ifndef SYMREG_JSON_IO_HPP
#define SYMREG_JSON_IO_HPP

#include <symreg/laurent.hpp>
#include <symreg/symbol.hpp>

#include <json.hpp>

namespace symreg {

using nlohmann::json;

inline json to_json(const Rational& r) { return rat_to_string(r); }

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) throw std::invalid_argument("rational must be a \"p/q\" string");
    return rat_from_string(j.get<std::string>());
}

inline json to_json(const Polynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(rat_to_string(c));
    return arr;
}

inline Polynomial polynomial_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be an ascending array");
    std::vector<Rational> c;
    for (const auto& e : j) c.push_back(rational_from_json(e));
    return Polynomial(std::move(c));
}

inline json to_json(const RationalFunction& f) {
    return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

inline RationalFunction rational_function_from_json(const json& j) {
    if (j.is_string() || j.is_number_integer())
        return RationalFunction(rational_from_json(j));
    return RationalFunction(polynomial_from_json(j.at("num")),
                            j.contains("den") ? polynomial_from_json(j.at("den"))
                                              : Polynomial(Rational(1)));
}

inline json to_json(const LaurentSeries& s) {
    json coeffs = json::object();
    for (const auto& [d, v] : s.coeffs()) coeffs[std::to_string(d)] = rat_to_string(v);
    return json{{"pole_bound", s.pole_bound()},
                {"trunc", s.trunc() == LaurentSeries::kExact ? json(nullptr) : json(s.trunc())},
                {"coeffs", coeffs}};
}

inline LaurentSeries laurent_from_json(const json& j) {
    std::map<int, Rational> coeffs;
    for (const auto& [key, val] : j.at("coeffs").items())
        coeffs[std::stoi(key)] = rational_from_json(val);
    int trunc = j.contains("trunc") && !j.at("trunc").is_null() ? j.at("trunc").get<int>()
                                                                : LaurentSeries::kExact;
    int pb = j.value("pole_bound", 0);
    if (!coeffs.empty()) pb = std::max(pb, -coeffs.begin()->first);
    return LaurentSeries(std::move(coeffs), pb, trunc);
}

inline json to_json(const LogSymbol& s) {
    json terms = json::array();
    for (const auto& [k, c] : s.terms())
        terms.push_back(json{{"a", rat_to_string(k.exp.a)},
                             {"b", rat_to_string(k.exp.b)},
                             {"logpow", k.logpow},
                             {"coeff", to_json(c)}});
    return json{{"dim", s.dim()}, {"omega_power", s.omega_power()}, {"terms", terms}};
}

inline LogSymbol symbol_from_json(const json& j) {
    LogSymbol s(j.value("dim", 1), j.value("omega_power", 0));
    for (const auto& t : j.at("terms"))
        s.add_term({rational_from_json(t.at("a")),
                    t.contains("b") ? rational_from_json(t.at("b")) : Rational(0)},
                   t.value("logpow", 0), rational_function_from_json(t.at("coeff")));
    return s;
}

inline TensorWord word_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("word must be an array of symbols");
    std::vector<LogSymbol> factors;
    for (const auto& e : j) factors.push_back(symbol_from_json(e));
    return TensorWord(std::move(factors));
}

}  // namespace symreg

#endif
