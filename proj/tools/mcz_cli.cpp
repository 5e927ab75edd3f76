#include <complex>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcz/analytic.hpp"
#include "mcz/complex_parse.hpp"
#include "mcz/gaussian.hpp"
#include "mcz/multicomplex.hpp"
#include "mcz/quadratic.hpp"
#include "mcz/series.hpp"
#include "mcz/verify.hpp"

namespace {

using nlohmann::json;

json idempotent_to_json(const mcz::IdempotentVector& v) {
    json comps = json::array();
    for (const auto& c : v.components)
        comps.push_back({{"re", mcz::rational_to_string(c.re)},
                         {"im", mcz::rational_to_string(c.im)}});
    return {{"level", v.level}, {"components", comps}};
}

mcz::IdempotentVector idempotent_from_json(const std::string& text) {
    const json j = json::parse(text);
    mcz::IdempotentVector v;
    v.level = j.at("level").get<int>();
    for (const auto& c : j.at("components"))
        v.components.push_back({mcz::rational_from_string(c.at("re").get<std::string>()),
                                mcz::rational_from_string(c.at("im").get<std::string>())});
    return v;
}

json eval_to_json(const mcz::EvalResult& r) {
    return {{"value", {r.value.real(), r.value.imag()}},
            {"est_error", r.est_error},
            {"method", r.method}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multicomplex zeta toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format: json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    // mc ---------------------------------------------------------------
    auto* mc = app.add_subcommand("mc", "exact multicomplex arithmetic");
    mc->require_subcommand(1);
    std::string mc_a, mc_b;
    auto* mc_add_cmd = mc->add_subcommand("add", "sum of two elements");
    mc_add_cmd->add_option("a", mc_a)->required();
    mc_add_cmd->add_option("b", mc_b)->required();
    auto* mc_mul_cmd = mc->add_subcommand("mul", "product of two elements");
    mc_mul_cmd->add_option("a", mc_a)->required();
    mc_mul_cmd->add_option("b", mc_b)->required();
    auto* mc_inv_cmd = mc->add_subcommand("inverse", "multiplicative inverse");
    mc_inv_cmd->add_option("z", mc_a)->required();
    auto* mc_toi_cmd = mc->add_subcommand("to-idem", "final-stage idempotent coordinates");
    mc_toi_cmd->add_option("z", mc_a)->required();
    auto* mc_fromi_cmd = mc->add_subcommand("from-idem", "element from idempotent coordinates");
    mc_fromi_cmd->add_option("v", mc_a)->required();
    auto* mc_zd_cmd = mc->add_subcommand("is-zero-divisor", "zero-divisor test");
    mc_zd_cmd->add_option("z", mc_a)->required();
    int idem_n = 2, idem_k = 1;
    auto* mc_set_cmd = mc->add_subcommand("idem-set", "the idempotent set S_k");
    mc_set_cmd->add_option("n", idem_n)->required();
    mc_set_cmd->add_option("k", idem_k)->required();

    // field ------------------------------------------------------------
    auto* field = app.add_subcommand("field", "quadratic field data");
    std::int64_t field_d = -1;
    auto* field_info = field->add_subcommand("info", "discriminant, characters, units");
    field_info->add_option("d", field_d)->required();

    // gauss ------------------------------------------------------------
    auto* gauss = app.add_subcommand("gauss", "sums of two squares in Z[i]");
    std::int64_t gauss_n = 1;
    auto* gauss_r2 = gauss->add_subcommand("r2", "representation count r2(n)");
    gauss_r2->add_option("n", gauss_n)->required();
    auto* gauss_table = gauss->add_subcommand("table", "CSV table n, r2, a_n, s1, s3");
    gauss_table->add_option("N", gauss_n)->required();

    // series -----------------------------------------------------------
    auto* series = app.add_subcommand("series", "exact Dirichlet coefficients");
    std::string series_kind = "qi";
    int series_level = 2;
    std::int64_t series_limit = 25;
    auto* series_coeffs = series->add_subcommand("coeffs", "coefficient table");
    series_coeffs->add_option("--series", series_kind)->check(CLI::IsMember({"qi", "bqn"}));
    series_coeffs->add_option("--level", series_level);
    series_coeffs->add_option("--limit", series_limit);

    // zeta -------------------------------------------------------------
    auto* zeta = app.add_subcommand("zeta", "analytic evaluations");
    zeta->require_subcommand(1);
    std::string zeta_target = "riemann", zeta_s = "2", zeta_grid = "0.2:0.8:7";
    int zeta_level = 2;
    auto* zeta_eval = zeta->add_subcommand("eval", "evaluate a zeta or L function");
    zeta_eval->add_option("--target", zeta_target)
        ->check(CLI::IsMember({"riemann", "beta", "qi", "bqn"}));
    zeta_eval->add_option("--level", zeta_level);
    zeta_eval->add_option("--s", zeta_s)->required();
    auto* zeta_funceq = zeta->add_subcommand("funceq", "functional-equation residual grid");
    zeta_funceq->add_option("--level", zeta_level);
    zeta_funceq->add_option("--grid", zeta_grid, "re0:re1:count[:im]");
    auto* zeta_constants = zeta->add_subcommand("constants", "special constants");

    // verify -----------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "paper-reproduction report");
    std::string profile = "quick";
    verify->add_option("--profile", profile)->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (mc_add_cmd->parsed()) {
            std::cout << mcz::mc_add(mcz::Multicomplex::from_json(mc_a),
                                     mcz::Multicomplex::from_json(mc_b))
                             .to_json()
                      << "\n";
        } else if (mc_mul_cmd->parsed()) {
            std::cout << mcz::mc_mul(mcz::Multicomplex::from_json(mc_a),
                                     mcz::Multicomplex::from_json(mc_b))
                             .to_json()
                      << "\n";
        } else if (mc_inv_cmd->parsed()) {
            std::cout << mcz::mc_inverse(mcz::Multicomplex::from_json(mc_a)).to_json() << "\n";
        } else if (mc_toi_cmd->parsed()) {
            std::cout << idempotent_to_json(
                             mcz::to_idempotent(mcz::Multicomplex::from_json(mc_a)))
                             .dump()
                      << "\n";
        } else if (mc_fromi_cmd->parsed()) {
            std::cout << mcz::from_idempotent(idempotent_from_json(mc_a)).to_json() << "\n";
        } else if (mc_zd_cmd->parsed()) {
            std::cout << (mcz::is_zero_divisor(mcz::Multicomplex::from_json(mc_a)) ? "true"
                                                                                   : "false")
                      << "\n";
        } else if (mc_set_cmd->parsed()) {
            json arr = json::array();
            for (const auto& e : mcz::idempotent_set(idem_n, idem_k))
                arr.push_back(json::parse(e.to_json()));
            std::cout << arr.dump() << "\n";
        } else if (field_info->parsed()) {
            const auto f = mcz::make_field(field_d);
            json j{{"d", f.d}, {"delta", f.delta}, {"unit_order", f.unit_order}};
            if (f.class_number_hint)
                j["class_number_hint"] = *f.class_number_hint;
            else
                j["class_number_hint"] = nullptr;
            json chi = json::array();
            const std::int64_t period = f.delta < 0 ? -f.delta : f.delta;
            for (std::int64_t m = 1; m <= period; ++m) chi.push_back(mcz::chi_K(f, m));
            j["chi_table"] = chi;
            std::cout << j.dump() << "\n";
        } else if (gauss_r2->parsed()) {
            std::cout << mcz::r2_bruteforce(gauss_n) << "\n";
        } else if (gauss_table->parsed()) {
            std::cout << "n,r2,a_n,s1,s3\n";
            for (std::int64_t n = 1; n <= gauss_n; ++n) {
                const auto [s1, s3] = mcz::sigma_counts(n);
                const auto r2 = mcz::r2_via_divisors(n);
                std::cout << n << "," << r2 << "," << r2 / 4 << "," << s1 << "," << s3
                          << "\n";
            }
        } else if (series_coeffs->parsed()) {
            const auto table = series_kind == "qi"
                                   ? mcz::coeffs_zeta_qi(series_limit)
                                   : mcz::coeffs_bqn(series_level, series_limit);
            if (format == "json") {
                json vals = json::array();
                for (std::int64_t n = 1; n <= table.N; ++n) vals.push_back(table.at(n).str());
                std::cout << json{{"label", table.label}, {"N", table.N}, {"values", vals}}.dump()
                          << "\n";
            } else {
                std::cout << "n,value\n";
                for (std::int64_t n = 1; n <= table.N; ++n)
                    std::cout << n << "," << table.at(n).str() << "\n";
            }
        } else if (zeta_eval->parsed()) {
            const auto s = mcz::parse_complex(zeta_s);
            mcz::EvalResult r;
            if (zeta_target == "riemann")
                r = mcz::riemann_zeta(s);
            else if (zeta_target == "beta")
                r = mcz::dirichlet_beta(s);
            else if (zeta_target == "qi")
                r = mcz::zeta_qi(s);
            else
                r = mcz::zeta_bqn(zeta_level, s);
            std::cout << eval_to_json(r).dump() << "\n";
        } else if (zeta_funceq->parsed()) {
            double re0 = 0.2, re1 = 0.8, im = 0.5;
            int count = 7;
            if (std::sscanf(zeta_grid.c_str(), "%lf:%lf:%d:%lf", &re0, &re1, &count, &im) < 3)
                throw std::invalid_argument("grid spec must be re0:re1:count[:im]");
            std::cout << "level,s_re,s_im,residual\n";
            for (int k = 0; k < count; ++k) {
                const double re = count == 1 ? re0 : re0 + (re1 - re0) * k / (count - 1);
                char buf[96];
                std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g\n", zeta_level, re, im,
                              mcz::functional_eq_residual(zeta_level, {re, im}));
                std::cout << buf;
            }
        } else if (zeta_constants->parsed()) {
            const auto g = mcz::gamma_qi_constant();
            const json j{{"L1", mcz::dirichlet_beta(1.0).value.real()},
                         {"gamma_qi", g.closed_form},
                         {"sierpinski", mcz::sierpinski_constant()},
                         {"regulator_2", std::log(1.0 + std::sqrt(2.0))}};
            std::cout << j.dump() << "\n";
        } else if (verify->parsed()) {
            const auto report = mcz::run_verify(profile == "quick"
                                                    ? mcz::VerifyProfile::Quick
                                                    : mcz::VerifyProfile::Full);
            if (format == "json")
                std::cout << mcz::report_to_json(report) << "\n";
            else if (format == "csv")
                std::cout << mcz::report_to_csv(report);
            else
                std::cout << mcz::report_to_text(report);
            for (const auto& e : report)
                if (!e.passed) return 1;
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
