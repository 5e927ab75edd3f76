#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "mcz/complex_parse.hpp"
#include "mcz/verify.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(MCZ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("complex literal parsing") {
    using mcz::parse_complex;
    CHECK(parse_complex("2") == std::complex<double>(2.0, 0.0));
    CHECK(parse_complex("-3.5") == std::complex<double>(-3.5, 0.0));
    CHECK(parse_complex("3.5i") == std::complex<double>(0.0, 3.5));
    CHECK(parse_complex("i") == std::complex<double>(0.0, 1.0));
    CHECK(parse_complex("-i") == std::complex<double>(0.0, -1.0));
    CHECK(parse_complex("1+2i") == std::complex<double>(1.0, 2.0));
    CHECK(parse_complex("2.5-0.5i") == std::complex<double>(2.5, -0.5));
    CHECK(parse_complex("0.5+14.134725i") == std::complex<double>(0.5, 14.134725));
    CHECK(parse_complex("1-i") == std::complex<double>(1.0, -1.0));

    CHECK_THROWS_AS(parse_complex(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("1+"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("1i2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("1+2"), std::invalid_argument);
}

TEST_CASE("cli arithmetic round trips") {
    const std::string one_plus_k = R"('{"level":2,"coords":["1","0","0","1"]}')";
    const std::string k = R"('{"level":2,"coords":["0","0","0","1"]}')";

    auto r = run_cli("mc mul " + k + " " + k);
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out) ==
          json::parse(R"({"coords":["1/1","0/1","0/1","0/1"],"level":2})"));

    r = run_cli("mc add " + k + " " + one_plus_k);
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out).at("coords")[3] == "2/1");

    // (1+k)/2 is idempotent, hence a zero divisor
    const std::string e = R"('{"level":2,"coords":["1/2","0","0","1/2"]}')";
    r = run_cli("mc is-zero-divisor " + e);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "true\n");
    r = run_cli("mc inverse " + e);
    CHECK(r.exit_code == 2);

    r = run_cli("mc to-idem " + k);
    CHECK(r.exit_code == 0);
    const auto idem = json::parse(r.out);
    CHECK(idem.at("components")[0].at("re") == "1/1");
    CHECK(idem.at("components")[1].at("re") == "-1/1");

    r = run_cli("mc from-idem '" + idem.dump() + "'");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out).at("coords")[3] == "1/1");
}

TEST_CASE("cli number-theory commands") {
    auto r = run_cli("gauss r2 25");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "12\n");

    r = run_cli("field info -- -1");
    CHECK(r.exit_code == 0);
    const auto f = json::parse(r.out);
    CHECK(f.at("delta") == -4);
    CHECK(f.at("unit_order") == 4);
    CHECK(f.at("chi_table") == json::array({1, 0, -1, 0}));

    r = run_cli("series coeffs --series bqn --level 2 --limit 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,value\n1,1\n2,2\n3,0\n4,3\n5,4\n");

    r = run_cli("--format json series coeffs --series qi --limit 5");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out).at("values") ==
          json::array({"1", "1", "0", "1", "2"}));
}

TEST_CASE("cli analytic commands") {
    auto r = run_cli("zeta eval --target beta --s 1");
    CHECK(r.exit_code == 0);
    const auto b = json::parse(r.out);
    CHECK(std::abs(b.at("value")[0].get<double>() - 3.14159265358979323846 / 4) < 1e-12);
    CHECK(std::abs(b.at("value")[1].get<double>()) < 1e-15);

    r = run_cli("zeta eval --target bqn --level 2 --s 2+i");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out).at("est_error").get<double>() < 1e-9);

    r = run_cli("zeta funceq --level 2 --grid 0.2:0.8:4:1.5");
    CHECK(r.exit_code == 0);
    int lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines == 5);  // header + 4 grid rows

    r = run_cli("zeta constants");
    CHECK(r.exit_code == 0);
    const auto c = json::parse(r.out);
    CHECK(std::abs(c.at("sierpinski").get<double>() - 0.8228252496) < 1e-8);

    // pole hit: usage-style failure
    r = run_cli("zeta eval --target riemann --s 1");
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli error handling") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("mc add '{\"level\":2}' '{\"level\":2}'").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("series coeffs --series wrong").exit_code == 2);
}

TEST_CASE("verify runs are deterministic and machine-readable") {
    const auto a = run_cli("--format json verify --profile quick");
    const auto b = run_cli("--format json verify --profile quick");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    const auto report = json::parse(a.out);
    CHECK(report.is_array());
    CHECK(report.size() >= 20);
    std::string prev;
    for (const auto& entry : report) {
        CHECK(entry.at("passed").get<bool>());
        CHECK(entry.at("check_id").is_string());
        CHECK(entry.at("check_id").get<std::string>() > prev);  // sorted ids
        prev = entry.at("check_id").get<std::string>();
    }

    bool has_quarter_pi = false;
    for (const auto& entry : report)
        if (entry.at("paper_anchor").get<std::string>().find("π/4") != std::string::npos)
            has_quarter_pi = true;
    CHECK(has_quarter_pi);

    const auto csv = run_cli("--format csv verify --profile quick");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.substr(0, csv.out.find('\n')) ==
          "check_id,paper_anchor,expected,actual,tolerance,passed");
}

TEST_CASE("report serialization roundtrips") {
    const auto report = mcz::run_verify(mcz::VerifyProfile::Quick);
    const auto back = mcz::report_from_json(mcz::report_to_json(report));
    REQUIRE(back.size() == report.size());
    for (std::size_t i = 0; i < report.size(); ++i) {
        CHECK(back[i].check_id == report[i].check_id);
        CHECK(back[i].paper_anchor == report[i].paper_anchor);
        CHECK(back[i].expected == report[i].expected);
        CHECK(back[i].actual == report[i].actual);
        CHECK(back[i].tolerance == report[i].tolerance);
        CHECK(back[i].passed == report[i].passed);
    }
}
