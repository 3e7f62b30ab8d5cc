// Command-line surface: tabulate number sequences, print closed-form zeta
// values, evaluate the numeric oracles, and run the verification suites.
//
// Exit codes: 0 all pass, 1 verification failures, 2 usage/domain error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ezeta/padic_integrals.hpp"
#include "ezeta/qanalog.hpp"
#include "ezeta/report.hpp"
#include "ezeta/verify.hpp"

namespace {

using nlohmann::ordered_json;

ezeta::Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    // base forced to 10 throughout: "0.9" must not trigger octal parsing
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        ezeta::Int num(text.substr(0, slash), 10);
        ezeta::Int den(text.substr(slash + 1), 10);
        return ezeta::rational(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        ezeta::Int num(digits, 10);
        ezeta::Int den = ezeta::pow_int(10, text.size() - dot - 1);
        return ezeta::rational(num, den);
    }
    return ezeta::rational(ezeta::Int(text, 10), ezeta::Int(1));
}

struct OutputOptions {
    std::string format = "table";
    std::string out_file;
};

void emit(const OutputOptions& opt, const std::string& text) {
    if (opt.out_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(opt.out_file, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + opt.out_file);
        f << text;
    }
}

// Rows of (label, value) rendered in the three supported formats.
std::string render_rows(const OutputOptions& opt,
                        const std::vector<std::pair<std::string, std::string>>& rows) {
    if (opt.format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& [k, v] : rows) j.push_back({{"id", k}, {"value", v}});
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    if (opt.format == "tsv") {
        out << "id\tvalue\n";
        for (const auto& [k, v] : rows) out << k << '\t' << v << '\n';
    } else {
        for (const auto& [k, v] : rows) out << k << " = " << v << '\n';
    }
    return out.str();
}

std::string render_report(const OutputOptions& opt, const ezeta::VerificationReport& rep) {
    if (opt.format == "json") return rep.to_json().dump(2) + "\n";
    if (opt.format == "tsv") return rep.to_tsv();
    return rep.to_table();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and arbitrary-precision toolkit for Bernoulli/Euler numbers and zeta values"};
    app.require_subcommand(1);
    app.fallthrough();

    OutputOptions opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "json", "tsv"}))
        ->capture_default_str();
    app.add_option("--out", opt.out_file, "write output to FILE instead of stdout");

    // numbers
    std::string num_kind = "bernoulli";
    std::size_t num_max = 12;
    auto* numbers = app.add_subcommand("numbers", "tabulate a number sequence");
    numbers->add_option("--kind", num_kind)->check(CLI::IsMember({"bernoulli", "euler1", "euler2"}));
    numbers->add_option("--max", num_max, "largest index");

    // polys
    std::size_t poly_n = 1;
    std::string poly_x = "0";
    auto* polys = app.add_subcommand("polys", "evaluate Euler polynomials E_n^*(x)");
    polys->add_option("--n", poly_n)->required();
    polys->add_option("--x", poly_x, "rational evaluation point")->required();

    // zeta
    auto* zeta = app.add_subcommand("zeta", "closed-form zeta-type values");
    long z_even = -1, z_neg = -1, z_beta = -1, z_lambda = -1, z_euler = -1;
    zeta->add_option("--even", z_even, "zeta(2n)");
    zeta->add_option("--neg", z_neg, "zeta(-n)");
    zeta->add_option("--beta-odd", z_beta, "beta(2n+1)");
    zeta->add_option("--lambda", z_lambda, "lambda(2n)");
    zeta->add_option("--euler-even", z_euler, "zeta_E(2n)");

    // eval
    std::string eval_fn = "zeta", eval_s = "2", eval_a = "1";
    long eval_bits = 256;
    auto* eval = app.add_subcommand("eval", "arbitrary-precision numeric evaluation");
    eval->add_option("--fn", eval_fn)
        ->check(CLI::IsMember({"zeta", "hurwitz", "eta", "eulerzeta", "beta"}));
    eval->add_option("--s", eval_s)->required();
    eval->add_option("--a", eval_a, "shift for hurwitz");
    eval->add_option("--bits", eval_bits, "precision in bits");

    // verify
    std::string suite = "all";
    ezeta::VerifyConfig cfg;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"exact", "numeric", "padic", "q", "all"}));
    verify->add_option("--max-index", cfg.max_index);
    verify->add_option("--bits", cfg.bits);
    verify->add_option("--p", cfg.primes, "primes for the p-adic checks")->delimiter(',');
    verify->add_option("--depth", cfg.depth);

    // padic
    long pd_p = 3, pd_depth = 3;
    std::size_t pd_moment = 0;
    std::string pd_measure = "fermionic";
    auto* padic = app.add_subcommand("padic", "finite-level p-adic integral moments");
    padic->add_option("--p", pd_p)->required();
    padic->add_option("--depth", pd_depth)->required();
    padic->add_option("--moment", pd_moment)->required();
    padic->add_option("--measure", pd_measure)->check(CLI::IsMember({"fermionic", "volkenborn"}));

    // q
    std::string q_value = "2";
    std::size_t q_m = 0;
    long q_bits = 256;
    auto* qcmd = app.add_subcommand("q", "Carlitz q-Bernoulli numbers (real mode)");
    qcmd->add_option("--q", q_value)->required();
    qcmd->add_option("--m", q_m)->required();
    qcmd->add_option("--bits", q_bits);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream err;
        int code = app.exit(e, std::cout, err);
        std::cerr << err.str();
        return code == 0 ? 0 : 2;
    }

    try {
        std::vector<std::pair<std::string, std::string>> rows;
        if (*numbers) {
            ezeta::NumberKind kind = num_kind == "bernoulli" ? ezeta::NumberKind::B
                                     : num_kind == "euler1"  ? ezeta::NumberKind::E_star
                                                             : ezeta::NumberKind::E_second;
            ezeta::NumberTable t = ezeta::number_table(kind, num_max);
            if (opt.format == "json") {
                ordered_json j = ordered_json::array();
                for (const auto& v : t.values) j.push_back(ezeta::to_string(v));
                emit(opt, j.dump(2) + "\n");
            } else {
                for (std::size_t n = 0; n < t.values.size(); ++n)
                    rows.emplace_back(num_kind + "[" + std::to_string(n) + "]",
                                      ezeta::to_string(t.values[n]));
                emit(opt, render_rows(opt, rows));
            }
            return 0;
        }
        if (*polys) {
            ezeta::Rational x = parse_rational(poly_x);
            rows.emplace_back("E_" + std::to_string(poly_n) + "^*(" + poly_x + ")",
                              ezeta::to_string(ezeta::euler_poly(poly_n, x)));
            emit(opt, render_rows(opt, rows));
            return 0;
        }
        if (*zeta) {
            if (z_even > 0) rows.emplace_back("zeta(2n), n=" + std::to_string(z_even),
                                              ezeta::zeta_even(z_even).str());
            if (z_neg > 0) rows.emplace_back("zeta(-n), n=" + std::to_string(z_neg),
                                             ezeta::to_string(ezeta::zeta_neg(z_neg)));
            if (z_beta >= 0) rows.emplace_back("beta(2n+1), n=" + std::to_string(z_beta),
                                               ezeta::beta_odd(z_beta).str());
            if (z_lambda > 0) rows.emplace_back("lambda(2n), n=" + std::to_string(z_lambda),
                                                ezeta::lambda_even(z_lambda).str());
            if (z_euler > 0) rows.emplace_back("zeta_E(2n), n=" + std::to_string(z_euler),
                                               ezeta::euler_zeta_even(z_euler).str());
            if (rows.empty()) {
                std::cerr << "zeta: select one of --even/--neg/--beta-odd/--lambda/--euler-even\n";
                return 2;
            }
            emit(opt, render_rows(opt, rows));
            return 0;
        }
        if (*eval) {
            ezeta::BigFloat s(parse_rational(eval_s), eval_bits);
            ezeta::BigFloat value(eval_bits);
            if (eval_fn == "zeta") value = ezeta::zeta_em(s, eval_bits);
            else if (eval_fn == "hurwitz")
                value = ezeta::hurwitz_em(s, ezeta::BigFloat(parse_rational(eval_a), eval_bits),
                                          eval_bits);
            else if (eval_fn == "eta") value = ezeta::eta_accel(s, eval_bits);
            else if (eval_fn == "eulerzeta") value = ezeta::euler_zeta_eval(s, eval_bits);
            else value = ezeta::dirichlet_beta_eval(s, eval_bits);
            rows.emplace_back(eval_fn + "(s=" + eval_s + ")",
                              value.str(ezeta::decimal_digits(eval_bits)));
            emit(opt, render_rows(opt, rows));
            return 0;
        }
        if (*verify) {
            ezeta::VerificationReport rep =
                suite == "exact"     ? ezeta::verify_exact(cfg)
                : suite == "numeric" ? ezeta::verify_numeric(cfg)
                : suite == "padic"   ? ezeta::verify_padic(cfg)
                : suite == "q"       ? ezeta::verify_q(cfg)
                                     : ezeta::verify_all(cfg);
            emit(opt, render_report(opt, rep));
            return rep.all_passed() ? 0 : 1;
        }
        if (*padic) {
            if (pd_measure == "fermionic") {
                ezeta::PadicInt s = ezeta::fermionic_sum(pd_moment, pd_p, pd_depth);
                rows.emplace_back("fermionic moment " + std::to_string(pd_moment), s.str());
                rows.emplace_back("target E_n^*", ezeta::to_string(ezeta::euler_first(pd_moment)));
            } else {
                ezeta::VolkenbornResult r = ezeta::volkenborn_sum(pd_moment, pd_p, pd_depth);
                rows.emplace_back("volkenborn moment " + std::to_string(pd_moment),
                                  ezeta::to_string(r.exact));
                rows.emplace_back("reduced", r.reduced.str());
                rows.emplace_back("target B_n", ezeta::to_string(ezeta::bernoulli(pd_moment)));
            }
            emit(opt, render_rows(opt, rows));
            return 0;
        }
        if (*qcmd) {
            ezeta::Rational q = parse_rational(q_value);
            ezeta::BigFloat b = ezeta::carlitz_q_bernoulli(q_m, q, q_bits);
            rows.emplace_back("beta_{" + std::to_string(q_m) + "," + q_value + "}",
                              b.str(ezeta::decimal_digits(q_bits)));
            emit(opt, render_rows(opt, rows));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
