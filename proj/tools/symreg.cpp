#include <symreg/json_io.hpp>
#include <symreg/renorm.hpp>
#include <symreg/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace {

using symreg::json;

constexpr int kExitBadInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitTolerance = 4;

struct tolerance_unmet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw json::parse_error::create(101, 0, "cannot open " + path, nullptr);
    return json::parse(in);
}

/// Constants print as "p/q"; anything else as a num/den coefficient pair.
json rf_to_json(const symreg::RationalFunction& f) {
    if (f.is_constant()) return symreg::rat_to_string(f.constant_value());
    return symreg::to_json(f);
}

json expansion_to_json(const symreg::AsymptoticExpansion& e) {
    json div = json::array();
    for (const auto& [k, c] : e.divergent)
        div.push_back(json{{"a", symreg::rat_to_string(k.exp.a)},
                           {"b", symreg::rat_to_string(k.exp.b)},
                           {"logpow", k.logpow},
                           {"coeff", rf_to_json(c)}});
    json logs = json::object();
    for (const auto& [q, c] : e.log_divergent) logs[std::to_string(q)] = rf_to_json(c);
    return json{{"divergent", div},
                {"log_divergent", logs},
                {"constant", rf_to_json(e.constant)},
                {"omega_power", e.omega_power}};
}

void flatten_csv(const json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten_csv(v, prefix.empty() ? k : prefix + "." + k, os);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten_csv(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else {
        os << prefix << "," << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const json& report, bool csv, const std::string& out_path) {
    std::ostringstream body;
    if (csv) {
        body << "key,value\n";
        flatten_csv(report, "", body);
    } else {
        body << report.dump(2) << "\n";
    }
    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << body.str();
    }
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stod(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty exponent list");
    return out;
}

symreg::Rational parse_rational(const std::string& s) { return symreg::rat_from_string(s); }

int run(int argc, char** argv) {
    CLI::App app{"regularised integrals, nested sums, and renormalised products"};
    app.require_subcommand(1);

    std::string symbol_path, word_path, family_path, out_path, mu_str = "1";
    std::string exponents_str, left_str, right_str;
    int trunc = 8, depth = 5, dim = 1, jobs = 1;
    double tol = 1e-9;
    bool expansion = false, verify_shuffle = false, kv_check = false;
    bool do_birkhoff = false, do_obstruction = false;
    bool csv = false, json_flag = false, strict = true, weak = false;

    auto add_common = [&](CLI::App* c) {
        c->add_flag("--json", json_flag, "JSON output (default)");
        c->add_flag("--csv", csv, "CSV output");
        c->add_option("--out", out_path, "write the report to a file");
        c->add_option("--jobs", jobs, "parallel verification cases");
        return c;
    };

    auto* cutoff = add_common(app.add_subcommand("cutoff", "finite part of a ball integral"));
    cutoff->add_option("--symbol", symbol_path, "symbol JSON file")->required();
    cutoff->add_option("--mu", mu_str, "radius rescaling p/q");
    cutoff->add_flag("--expansion", expansion, "emit the full divergent expansion");
    cutoff->add_option("--dim", dim, "override check: expected dimension");

    auto* chen = add_common(app.add_subcommand("chen", "permutation-summed nested integral"));
    chen->add_option("--word", word_path, "word JSON file (array of symbols)")->required();
    chen->add_flag("--verify-shuffle", verify_shuffle, "compare against the factor product");

    auto* laurent = add_common(app.add_subcommand("laurent", "germ of a regularised family"));
    laurent->add_option("--family", family_path, "family JSON file")->required();
    laurent->add_option("--trunc", trunc, "truncation order");
    laurent->add_flag("--kv-check", kv_check, "compare coefficient formulas with the germ");

    auto* renorm = add_common(app.add_subcommand("renorm", "renormalised product of germs"));
    renorm->add_option("--word", word_path, "word JSON file (families or germs)")->required();
    renorm->add_option("--trunc", trunc, "truncation order");
    renorm->add_flag("--birkhoff", do_birkhoff, "emit the Birkhoff factors");
    renorm->add_flag("--obstruction", do_obstruction, "emit the finite-part defect");

    auto* csum = add_common(app.add_subcommand("cutoff-sum", "finite part of symmetric sums"));
    csum->add_option("--symbol", symbol_path, "symbol JSON file")->required();
    csum->add_option("--depth", depth, "summation depth");

    auto* mzv = add_common(app.add_subcommand("mzv", "multiple zeta value"));
    mzv->add_option("--exponents", exponents_str, "comma list, e.g. 2,1")->required();
    mzv->add_flag("--strict", strict, "strict inequalities (default)");
    mzv->add_flag("--weak", weak, "weak inequalities");
    mzv->add_option("--tol", tol, "required error bound");
    mzv->add_option("--depth", depth, "summation depth");

    auto* stuffle = add_common(app.add_subcommand("stuffle", "second-shuffle product check"));
    stuffle->add_option("--left", left_str, "left exponent list")->required();
    stuffle->add_option("--right", right_str, "right exponent list")->required();
    stuffle->add_option("--tol", tol, "residual tolerance");
    stuffle->add_option("--depth", depth, "summation depth");

    auto* verify = add_common(app.add_subcommand("verify-all", "run the acceptance suite"));

    CLI11_PARSE(app, argc, argv);

    json report;

    if (cutoff->parsed()) {
        symreg::LogSymbol s = symreg::symbol_from_json(load_json(symbol_path));
        if (cutoff->count("--dim") && s.dim() != dim)
            throw std::invalid_argument("symbol dimension does not match --dim");
        symreg::AsymptoticExpansion e = symreg::ball_expansion(s);
        report["command"] = "cutoff";
        report["input"] = symbol_path;
        report["value"] = rf_to_json(e.constant);
        report["omega_power"] = e.omega_power;
        symreg::Rational mu = parse_rational(mu_str);
        if (mu != 1) {
            json rs = json::array();
            for (const auto& c : symreg::rescaled_finite_part(s, mu)) rs.push_back(rf_to_json(c));
            report["rescaled"] = rs;
            report["mu"] = symreg::rat_to_string(mu);
        }
        if (expansion) report["expansion"] = expansion_to_json(e);
    } else if (chen->parsed()) {
        symreg::TensorWord w = symreg::word_from_json(load_json(word_path));
        report["command"] = "chen";
        report["input"] = word_path;
        report["value"] = rf_to_json(symreg::chen_cutoff_integral(w));
        report["omega_power"] = symreg::multi_omega_power(w);
        if (verify_shuffle) {
            auto rep = symreg::verify_integral_shuffle(w);
            report["shuffle"] = json{{"product", rf_to_json(rep.product)},
                                     {"shuffle_sum", rf_to_json(rep.shuffle_sum)},
                                     {"equal", rep.equal},
                                     {"partial_sums_nonintegral", rep.partial_sums_nonintegral}};
        }
    } else if (laurent->parsed()) {
        symreg::LogSymbol fam = symreg::symbol_from_json(load_json(family_path));
        auto germ = symreg::germ_of_integral(fam, trunc);
        report["command"] = "laurent";
        report["input"] = family_path;
        report["germ"] = symreg::to_json(germ.series);
        report["pole_order"] = germ.pole_order;
        report["omega_power"] = germ.omega_power;
        if (kv_check) {
            auto kv = symreg::kv_coefficients(fam, trunc);
            json r = json::object(), s = json::object();
            bool match = kv.fp == germ.series.finite_part();
            for (const auto& [j, v] : kv.r) {
                r[std::to_string(j)] = symreg::rat_to_string(v);
                match = match && v == germ.series.residue_at_order(j);
            }
            for (const auto& [j, v] : kv.s) {
                s[std::to_string(j)] = symreg::rat_to_string(v);
                match = match && v == germ.series.coeff(j);
            }
            report["kv"] = json{{"r", r}, {"fp", symreg::rat_to_string(kv.fp)}, {"s", s},
                                {"match", match}};
        }
    } else if (renorm->parsed()) {
        json in = load_json(word_path);
        if (!in.is_array() || in.empty())
            throw std::invalid_argument("renorm word must be a nonempty array");
        std::vector<symreg::LaurentSeries> germs;
        if (in.front().contains("coeffs")) {
            for (const auto& e : in) {
                symreg::LaurentSeries s = symreg::laurent_from_json(e);
                germs.push_back(symreg::LaurentSeries(s.coeffs(), s.pole_bound(),
                                                      std::min(s.trunc(), trunc)));
            }
        } else {
            auto gw = symreg::germ_word_of(symreg::word_from_json(in), trunc);
            germs = gw.factors();
        }
        symreg::GermWord w(germs);
        symreg::LaurentSeries value = symreg::renormalise(w);
        symreg::Rational naive_fp = symreg::checks::rec_product(germs).finite_part();
        report["command"] = "renorm";
        report["input"] = word_path;
        report["renormalised_value"] = symreg::rat_to_string(value.finite_part());
        report["renormalised_series"] = symreg::to_json(value);
        report["naive_fp"] = symreg::rat_to_string(naive_fp);
        report["obstruction"] = symreg::rat_to_string(symreg::obstruction(w));
        report["pole_check"] = value.pole_order() == 0;
        if (do_birkhoff) {
            auto bk = symreg::birkhoff(w);
            report["birkhoff"] = json{{"phi_minus", symreg::to_json(bk.phi_minus)},
                                      {"phi_plus", symreg::to_json(bk.phi_plus)}};
        }
        (void)do_obstruction;  // always included in the report
    } else if (csum->parsed()) {
        symreg::LogSymbol s = symreg::symbol_from_json(load_json(symbol_path));
        auto r = symreg::cutoff_sum(s, depth);
        report["command"] = "cutoff-sum";
        report["input"] = symbol_path;
        report["value"] = r.value;
        report["error_bound"] = r.error_bound;
        report["depth"] = depth;
    } else if (mzv->parsed()) {
        if (weak) strict = false;
        auto r = symreg::mzv({parse_list(exponents_str), strict, tol}, depth);
        report["command"] = "mzv";
        report["exponents"] = exponents_str;
        report["strict"] = strict;
        report["value"] = r.value;
        report["error_bound"] = r.error_bound;
        report["tol"] = tol;
        emit(report, csv, out_path);
        if (r.error_bound > tol) throw tolerance_unmet("error bound exceeds tolerance");
        return 0;
    } else if (stuffle->parsed()) {
        auto rep = symreg::verify_stuffle(parse_list(left_str), parse_list(right_str), tol, depth);
        report["command"] = "stuffle";
        report["left"] = left_str;
        report["right"] = right_str;
        report["lhs"] = rep.lhs;
        report["rhs"] = rep.rhs;
        report["residual"] = rep.residual;
        report["tol"] = tol;
        report["pass"] = rep.pass;
        emit(report, csv, out_path);
        if (!rep.pass) throw tolerance_unmet("stuffle residual exceeds tolerance");
        return 0;
    } else if (verify->parsed()) {
        using Check = symreg::CriterionResult (*)();
        const Check checks[] = {symreg::checks::rota_baxter_identity,
                                symreg::checks::symbol_shuffle,
                                symreg::checks::integral_shuffle,
                                symreg::checks::residue_theorem,
                                symreg::checks::laurent_coefficients,
                                symreg::checks::renormalisation,
                                symreg::checks::birkhoff_agreement,
                                symreg::checks::zeta_continuation,
                                symreg::checks::mzv_stuffle,
                                symreg::checks::discrete_rota_baxter};
        std::vector<std::future<symreg::CriterionResult>> futs;
        for (Check c : checks)
            futs.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, c));
        json arr = json::array();
        int failed = 0;
        for (auto& f : futs) {
            symreg::CriterionResult r = f.get();
            arr.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            if (!r.pass) ++failed;
        }
        report["command"] = "verify-all";
        report["criteria"] = arr;
        report["failed"] = failed;
        emit(report, csv, out_path);
        return failed == 0 ? 0 : 1;
    }

    emit(report, csv, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const tolerance_unmet& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTolerance;
    } catch (const symreg::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
}
