#include "mcz/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include <json.hpp>

#include "mcz/analytic.hpp"
#include "mcz/gaussian.hpp"
#include "mcz/multicomplex.hpp"
#include "mcz/quadratic.hpp"
#include "mcz/series.hpp"

namespace mcz {

namespace {

constexpr double pi = std::numbers::pi;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Multicomplex random_mc(int level, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Rational> coords(std::size_t{1} << level);
    for (auto& c : coords) c = Rational(num(rng), den(rng));
    return Multicomplex(level, std::move(coords));
}

struct Registry {
    std::vector<ReportEntry> entries;

    void numeric(const std::string& id, const std::string& anchor, double expected,
                 double actual, double tol) {
        entries.push_back({id, anchor, fmt(expected), fmt(actual), tol,
                           std::abs(expected - actual) <= tol});
    }
    void exact(const std::string& id, const std::string& anchor,
               const std::string& expected, const std::string& actual) {
        entries.push_back({id, anchor, expected, actual, 0.0, expected == actual});
    }
};

}  // namespace

std::vector<ReportEntry> run_verify(VerifyProfile profile) {
    const bool full = profile == VerifyProfile::Full;
    Registry reg;

    // special values and constants
    reg.numeric("beta-at-1", "π/4", pi / 4.0,
                dirichlet_beta(1.0).value.real(), 1e-12);
    reg.numeric("class-number-formula", "2 pi h / (w sqrt|Delta|)",
                2.0 * pi / (4.0 * std::sqrt(4.0)), L_chi_at_1(make_field(-1)), 1e-12);
    reg.numeric("sierpinski-value", "0.8228252...", 0.8228252, sierpinski_constant(), 1e-6);
    reg.numeric("sierpinski-series", "pi/3 - log 4 + 2 gamma - 4 sum",
                sierpinski_constant(), sierpinski_series(40), 1e-10);
    {
        const auto g = gamma_qi_constant();
        reg.numeric("gamma-qi-closed-vs-alt", "Euler constant of Q(i)", g.closed_form,
                    g.alternate_form, 1e-12);
        reg.numeric("gamma-qi-closed-vs-fd", "L'(chi_{-4},1) + gamma L(chi_{-4},1)",
                    g.closed_form, g.finite_difference, 1e-6);
    }
    {
        const double eps = 1e-6;
        reg.numeric("residue-qi", "residue of zeta_QI at s=1", pi / 4.0,
                    (eps * zeta_qi(Cplx(1.0 + eps)).value).real(), 1e-5);
    }

    // characters and fields
    {
        std::string want = "1,0,-1,0", got;
        const auto f = make_field(-1);
        for (int m = 1; m <= 4; ++m)
            got += (m > 1 ? "," : "") + std::to_string(chi_K(f, m));
        reg.exact("chi-table-qi", "chi_{-4} pattern mod 4", want, got);
    }
    reg.exact("unit-orders", "w_d = 4, 6, 2",
              "4,6,2",
              std::to_string(unit_group_order(-1)) + "," +
                  std::to_string(unit_group_order(-3)) + "," +
                  std::to_string(unit_group_order(-7)));
    {
        const auto p = pell_fundamental(2);
        reg.exact("pell-d2", "fundamental Pell solution for d=2", "(3,2)",
                  "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")");
        reg.numeric("regulator-d2", "R_2 = log(1+sqrt 2)", std::log(1.0 + std::sqrt(2.0)),
                    std::log(3.0 + 2.0 * std::sqrt(2.0)) / 2.0, 1e-14);
    }
    {
        // splitting vs Gaussian ground truth
        const std::int64_t bound = full ? 10'000 : 1'000;
        const auto f = make_field(-1);
        std::int64_t bad = 0;
        for (std::int64_t p : primes_up_to(bound)) {
            const auto t = splitting_type(f, p);
            const bool split_truth = p != 2 && r2_bruteforce(p) > 0;
            const auto want = p == 2              ? SplittingType::Ramified
                              : split_truth       ? SplittingType::Split
                                                  : SplittingType::Inert;
            if (t != want) ++bad;
        }
        reg.exact("splitting-gauss", "prime decomposition in Z[i]", "0 mismatches",
                  std::to_string(bad) + " mismatches");
    }

    // Dirichlet coefficients
    {
        const auto t = coeffs_zeta_qi(25);
        const std::pair<int, int> printed[] = {{1, 1},  {2, 1},  {4, 1},  {5, 2},
                                               {8, 1},  {10, 2}, {13, 2}, {16, 1},
                                               {17, 2}, {18, 1}, {20, 2}, {25, 3}};
        int bad = 0;
        for (auto [n, v] : printed)
            if (t.at(n) != v) ++bad;
        for (std::int64_t n = 1; n <= 25; ++n)
            if (t.at(n) != ideal_count(n)) ++bad;
        reg.exact("coeffs-qi-25", "Dirichlet expansion of zeta_QI", "0 mismatches",
                  std::to_string(bad) + " mismatches");
    }
    {
        const auto t = coeffs_bqn(2, 5);
        std::string got;
        for (std::int64_t n = 1; n <= 5; ++n)
            got += (n > 1 ? "," : "") + t.at(n).str();
        reg.exact("coeffs-bqn2-5", "A_1..A_5 = 1,2,0,3,4", "1,2,0,3,4", got);
    }

    // Gaussian-integer identities
    {
        const std::int64_t bound = full ? 100'000 : 10'000;
        std::int64_t bad = 0;
        for (std::int64_t n = 1; n <= bound; ++n) {
            const auto [s1, s3] = sigma_counts(n);
            const std::int64_t r = r2_bruteforce(n);
            if (r != r2_via_divisors(n) || r != 4 * (s1 - s3)) ++bad;
        }
        reg.exact("r2-equivalence", "r2 = 4 sum chi_{-4}(d) = 4(s1 - s3)", "0 mismatches",
                  std::to_string(bad) + " mismatches");
    }
    {
        std::int64_t bad = 0;
        for (std::int64_t p : primes_up_to(10'000))
            if (p % 4 == 1 && r2_bruteforce(p) != 8) ++bad;
        reg.exact("fermat-r2", "r_2(p) = 8 for p = 1 mod 4", "0 mismatches",
                  std::to_string(bad) + " mismatches");
    }

    // multicomplex algebra
    {
        const auto s1 = idempotent_set(2, 1);
        const auto prod = mc_mul(s1[0], s1[1]);
        reg.exact("e-times-edagger", "e * e-dagger = 0", "0",
                  prod.is_zero() ? "0" : "nonzero");
        const auto k = Multicomplex::unit(2, 3);
        reg.exact("hyperbolic-unit", "k^2 = 1", "1",
                  mc_mul(k, k) == Multicomplex::one(2) ? "1" : "other");
        const auto v = to_idempotent(k);
        reg.exact("k-idempotent-image", "image of k is (1,-1)", "(1/1,-1/1)",
                  "(" + rational_to_string(v.components[0].re) + "," +
                      rational_to_string(v.components[1].re) + ")");
    }
    {
        std::mt19937_64 rng(20240229);
        const int pairs = full ? 1000 : 100;
        int bad = 0;
        for (int level = 2; level <= 4; ++level) {
            for (int it = 0; it < pairs; ++it) {
                const auto z = random_mc(level, rng);
                const auto w = random_mc(level, rng);
                const auto lhs = to_idempotent(mc_mul(z, w));
                auto rhs = to_idempotent(z);
                const auto vw = to_idempotent(w);
                for (std::size_t j = 0; j < rhs.components.size(); ++j)
                    rhs.components[j] = rhs.components[j] * vw.components[j];
                if (!(lhs == rhs)) ++bad;
            }
        }
        reg.exact("idempotent-homomorphism", "component-wise product", "0 mismatches",
                  std::to_string(bad) + " mismatches");
    }

    // analytic identities
    {
        double worst = 0.0;
        const auto f = make_field(-1);
        for (int k = 0; k < 50; ++k) {
            const Cplx s(1.1 + 2.9 * (k % 10) / 9.0, -10.0 + 20.0 * (k / 10) / 4.0);
            const Cplx diff =
                zeta_qi(s).value - riemann_zeta(s).value * L_chi(f, s).value;
            worst = std::max(worst, std::abs(diff));
        }
        reg.numeric("zeta-factorization", "zeta_K = zeta * L(chi_K, .)", 0.0, worst, 1e-12);
    }
    {
        double worst = 0.0;
        const Cplx s(2.0, 0.0);
        const auto f = make_field(-1);
        for (std::int64_t p : primes_up_to(100)) {
            const Cplx ps = std::exp(s * std::log(static_cast<double>(p)));
            const int chi = chi_K(f, p);
            Cplx local;
            if (chi == 1)
                local = (1.0 - 1.0 / ps) * (1.0 - 1.0 / ps);
            else if (chi == -1)
                local = 1.0 - 1.0 / (ps * ps);
            else
                local = 1.0 - 1.0 / ps;
            const Cplx rhs = (1.0 - 1.0 / ps) * (1.0 - static_cast<double>(chi) / ps);
            worst = std::max(worst, std::abs(local - rhs));
        }
        reg.numeric("local-factor-lemma", "split/inert/ramified local factors", 0.0, worst,
                    1e-14);
    }
    {
        const std::int64_t P = full ? 100'000 : 10'000;
        reg.numeric("euler-product", "Euler product of zeta_QI at s=3",
                    zeta_qi(3.0).value.real(), euler_product_qi(3.0, P).real(), 1e-8);
    }
    {
        const long B = full ? 2000 : 500;
        double sum = 0.0;
        for (long mm = -B; mm <= B; ++mm)
            for (long nn = -B; nn <= B; ++nn) {
                if (mm == 0 && nn == 0) continue;
                const double q = static_cast<double>(mm) * mm + static_cast<double>(nn) * nn;
                sum += 1.0 / (q * q * q);
            }
        reg.numeric("lattice-sum", "quarter-lattice sum at s=3", zeta_qi(3.0).value.real(),
                    sum / 4.0, 1e-6);
    }
    for (int level = 2; level <= 4; ++level) {
        double worst = 0.0;
        for (int k = 0; k < 30; ++k) {
            const Cplx s(0.15 + 0.7 * (k % 10) / 9.0, 0.4 + 2.0 * (k / 10));
            worst = std::max(worst, functional_eq_residual(level, s));
        }
        reg.numeric("funceq-n" + std::to_string(level), "completed-function reflection",
                    0.0, worst, 1e-8);
    }

    std::sort(reg.entries.begin(), reg.entries.end(),
              [](const ReportEntry& a, const ReportEntry& b) { return a.check_id < b.check_id; });
    return reg.entries;
}

std::string report_to_json(const std::vector<ReportEntry>& report) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : report)
        arr.push_back({{"check_id", e.check_id},
                       {"paper_anchor", e.paper_anchor},
                       {"expected", e.expected},
                       {"actual", e.actual},
                       {"tolerance", e.tolerance},
                       {"passed", e.passed}});
    return arr.dump(2);
}

std::string report_to_text(const std::vector<ReportEntry>& report) {
    std::string out;
    for (const auto& e : report) {
        out += e.passed ? "PASS  " : "FAIL  ";
        out += e.check_id + "  [" + e.paper_anchor + "]  expected " + e.expected +
               ", got " + e.actual + " (tol " + fmt(e.tolerance) + ")\n";
    }
    return out;
}

std::string report_to_csv(const std::vector<ReportEntry>& report) {
    std::string out = "check_id,paper_anchor,expected,actual,tolerance,passed\n";
    for (const auto& e : report) {
        out += e.check_id + ",\"" + e.paper_anchor + "\"," + e.expected + "," + e.actual +
               "," + fmt(e.tolerance) + "," + (e.passed ? "true" : "false") + "\n";
    }
    return out;
}

std::vector<ReportEntry> report_from_json(const std::string& text) {
    const auto arr = nlohmann::json::parse(text);
    std::vector<ReportEntry> out;
    for (const auto& j : arr)
        out.push_back({j.at("check_id").get<std::string>(),
                       j.at("paper_anchor").get<std::string>(),
                       j.at("expected").get<std::string>(),
                       j.at("actual").get<std::string>(),
                       j.at("tolerance").get<double>(), j.at("passed").get<bool>()});
    return out;
}

}  // namespace mcz
