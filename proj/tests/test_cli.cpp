#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wigcav/cli.hpp"
#include "wigcav/report.hpp"

using namespace wigcav;
using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s) {
        if (c == '\n') ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("exit codes follow the contract") {
    SUBCASE("usage errors exit 1") {
        CHECK(run({"wigner", "--eta", "1", "--nonsense"}).code == 1);
        CHECK(run({"wigner"}).code == 1);                            // missing required
        CHECK(run({"unknown-command"}).code == 1);
        CHECK(run({"cavity", "--d", "-1", "--radius", "1"}).code == 1);  // nonpositive
        CHECK(run({"verify", "--grid", "1"}).code == 1);
        CHECK(run({"trace", "--d", "1", "--radius", "2", "--y0", "0", "--slope0", "0",
                   "--trips", "0"}).code == 1);
    }
    SUBCASE("verification failure exits 2") {
        const CliRun r = run({"verify", "--grid", "3", "--tol", "1e-30"});
        CHECK(r.code == 2);
        CHECK(r.out.find("FAIL") != std::string::npos);
    }
    SUBCASE("domain error exits 3") {
        const CliRun r = run({"trace", "--d", "3", "--radius", "1", "--y0", "0.1", "--slope0",
                              "0", "--trips", "5"});
        CHECK(r.code == 3);
        CHECK(r.err.find("unstable") != std::string::npos);
    }
    SUBCASE("help exits 0") {
        CHECK(run({"--help"}).code == 0);
        CHECK(run({"wigner", "--help"}).code == 0);
    }
}

TEST_CASE("wigner command") {
    SUBCASE("radians run with JSON payload") {
        const CliRun r = run({"wigner", "--eta", "1", "--theta", "0", "--json"});
        CHECK(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(j["command"] == "wigner");
        CHECK(j["meta"]["tool"] == "wigcav");
        CHECK(j["inputs"]["angle_unit"] == "radians");
        CHECK(j["outputs"]["lambda"].get<double>() == 0.0);
        CHECK(j["outputs"]["omega_formula"].get<double>() == 0.0);
        CHECK(j["outputs"]["b1"].size() == 4);
        CHECK(j["outputs"]["b1"][0].size() == 4);
        CHECK(j["outputs"]["s1"].size() == 2);
        for (const auto& c : j["checks"]) CHECK(c["pass"] == true);
    }
    SUBCASE("degree flag converts input and output") {
        const CliRun r = run({"wigner", "--eta", "1", "--theta", "90", "--degrees", "--json"});
        CHECK(r.code == 0);
        const json j = json::parse(r.out);
        // rapidities are unit-independent
        CHECK(j["outputs"]["lambda"].get<double>() ==
              doctest::Approx(1.2041611185374338).epsilon(1e-13));
        // Omega(1, pi/2) in degrees
        const double omega_deg = 0.42078396163807291 * 180.0 / std::numbers::pi;
        CHECK(j["outputs"]["omega_formula"].get<double>() ==
              doctest::Approx(omega_deg).epsilon(1e-12));
        CHECK(j["outputs"]["omega_oracle"].get<double>() ==
              doctest::Approx(omega_deg).epsilon(1e-10));
        CHECK(j["outputs"]["big_theta"].get<double>() ==
              doctest::Approx(omega_deg - 90.0).epsilon(1e-12));
    }
    SUBCASE("text output carries the checks") {
        const CliRun r = run({"wigner", "--eta", "1", "--theta", "1.0"});
        CHECK(r.code == 0);
        CHECK(r.out.find("omega_formula_vs_oracle") != std::string::npos);
        CHECK(r.out.find("[PASS]") != std::string::npos);
    }
}

TEST_CASE("cavity command") {
    SUBCASE("stable cavity with two trips is the identity at confocal spacing") {
        const CliRun r = run({"cavity", "--d", "1", "--radius", "1", "--trips", "2", "--json"});
        CHECK(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(j["outputs"]["verdict"] == "stable");
        const auto closed = j["outputs"]["n_trip_closed"];
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                const double expect = (a == b) ? 1.0 : 0.0;
                CHECK(closed[a][b].get<double>() == doctest::Approx(expect).scale(1.0).epsilon(1e-12));
            }
        }
    }
    SUBCASE("half-radius separation reports the canonical parameters") {
        const CliRun r = run({"cavity", "--d", "1", "--radius", "2", "--trips", "0", "--json"});
        CHECK(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(std::cos(j["outputs"]["phi_rad"].get<double>()) == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(j["outputs"]["exp_2xi"].get<double>() == doctest::Approx(0.75).epsilon(1e-14));
        CHECK(j["outputs"]["accumulated_wigner_angle"].get<double>() == 0.0);
        CHECK(j["outputs"].contains("n_trip_closed") == false);
    }
    SUBCASE("unstable cavity still succeeds") {
        const CliRun r = run({"cavity", "--d", "3", "--radius", "1"});
        CHECK(r.code == 0);
        CHECK(r.out.find("unstable") != std::string::npos);
    }
    SUBCASE("marginal cavity is labeled") {
        const CliRun r = run({"cavity", "--d", "2", "--radius", "1", "--json"});
        CHECK(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(j["outputs"]["verdict"] == "marginal");
        CHECK(j["outputs"].contains("phi_rad"));
    }
}

TEST_CASE("trace command") {
    SUBCASE("CSV on stdout with trips+1 rows") {
        const CliRun r = run({"trace", "--d", "1", "--radius", "2", "--y0", "0.1", "--slope0",
                              "0.05", "--trips", "5"});
        CHECK(r.code == 0);
        CHECK(r.out.rfind("trip,y,slope,wigner_angle\n", 0) == 0);
        CHECK(count_lines(r.out) == 7);  // header + 6 states
    }
    SUBCASE("axial ray stays identically zero") {
        const CliRun r = run({"trace", "--d", "1", "--radius", "2", "--y0", "0", "--slope0",
                              "0", "--trips", "3"});
        CHECK(r.code == 0);
        std::istringstream lines(r.out);
        std::string line;
        std::getline(lines, line);  // header
        int idx = 0;
        while (std::getline(lines, line)) {
            CHECK(line.rfind(std::to_string(idx) + ",0,0,", 0) == 0);
            ++idx;
        }
        CHECK(idx == 4);
    }
    SUBCASE("confocal cavity returns the ray after two trips") {
        // 0.25 and -0.125 are exact binary doubles, so the round trip through
        // the -identity round-trip matrix reproduces them digit for digit
        const CliRun r = run({"trace", "--d", "1", "--radius", "1", "--y0", "0.25", "--slope0",
                              "-0.125", "--trips", "2"});
        CHECK(r.code == 0);
        std::istringstream lines(r.out);
        std::string header, row0, row1, row2;
        std::getline(lines, header);
        std::getline(lines, row0);
        std::getline(lines, row1);
        std::getline(lines, row2);
        CHECK(row0.rfind("0,0.25,-0.125,", 0) == 0);
        CHECK(row2.rfind("2,0.25,-0.125,", 0) == 0);
    }
    SUBCASE("CSV file plus report on stdout") {
        const std::string path = "trace_test_tmp.csv";
        const CliRun r = run({"trace", "--d", "1", "--radius", "2", "--y0", "0.1", "--slope0",
                              "0", "--trips", "4", "--csv", path});
        CHECK(r.code == 0);
        std::ifstream file(path);
        REQUIRE(file.good());
        std::stringstream content;
        content << file.rdbuf();
        CHECK(content.str().rfind("trip,y,slope,wigner_angle\n", 0) == 0);
        CHECK(count_lines(content.str()) == 6);
        CHECK(r.out.find("final_vs_closed_form") != std::string::npos);
        std::remove(path.c_str());
    }
    SUBCASE("force overrides the stability refusal") {
        const CliRun r = run({"trace", "--d", "3", "--radius", "1", "--y0", "0.1", "--slope0",
                              "0", "--trips", "3", "--force"});
        CHECK(r.code == 0);
        CHECK(count_lines(r.out) == 5);
    }
}

TEST_CASE("verify command") {
    SUBCASE("small grid passes every suite") {
        const CliRun r = run({"verify", "--grid", "3"});
        CHECK(r.code == 0);
        CHECK(r.out.find("suites passed") != std::string::npos);
        CHECK(r.out.find("FAIL") == std::string::npos);
    }
    SUBCASE("failing run names the offending point") {
        const CliRun r = run({"verify", "--grid", "3", "--tol", "1e-30"});
        CHECK(r.code == 2);
        CHECK(r.out.find("at ") != std::string::npos);
        CHECK((r.out.find("eta=") != std::string::npos ||
               r.out.find("d/R=") != std::string::npos));
    }
}

TEST_CASE("reports are deterministic") {
    SUBCASE("JSON is byte-identical across runs") {
        const CliRun a = run({"wigner", "--eta", "0.8", "--theta", "1.1", "--json"});
        const CliRun b = run({"wigner", "--eta", "0.8", "--theta", "1.1", "--json"});
        CHECK(a.out == b.out);
        const CliRun c = run({"cavity", "--d", "0.7", "--radius", "1", "--trips", "3", "--json"});
        const CliRun d = run({"cavity", "--d", "0.7", "--radius", "1", "--trips", "3", "--json"});
        CHECK(c.out == d.out);
    }
    SUBCASE("CSV is byte-identical across runs") {
        const std::vector<std::string> args = {"trace", "--d", "0.9", "--radius", "1",
                                               "--y0", "0.3", "--slope0", "-0.2", "--trips", "7"};
        CHECK(run(args).out == run(args).out);
    }
    SUBCASE("no timestamps in the payload") {
        const CliRun r = run({"cavity", "--d", "1", "--radius", "1", "--json"});
        const json j = json::parse(r.out);
        CHECK(j.contains("meta"));
        CHECK(j["meta"].contains("version"));
        CHECK(j["meta"].contains("timestamp") == false);
    }
}

TEST_CASE("report structure invariants") {
    const RunReport report = cmd_wigner(1.0, 0.7, false);
    SUBCASE("residuals are nonnegative and finite") {
        for (const auto& c : report.checks) {
            CHECK(c.residual >= 0.0);
            CHECK(std::isfinite(c.residual));
        }
    }
    SUBCASE("json carries the four schema keys") {
        const auto j = report.to_json();
        CHECK(j.contains("command"));
        CHECK(j.contains("inputs"));
        CHECK(j.contains("outputs"));
        CHECK(j.contains("checks"));
    }
    SUBCASE("all numeric outputs are finite") {
        const auto j = report.to_json();
        std::function<void(const nlohmann::ordered_json&)> walk =
            [&](const nlohmann::ordered_json& node) {
                if (node.is_number_float()) CHECK(std::isfinite(node.get<double>()));
                if (node.is_structured()) {
                    for (const auto& child : node) walk(child);
                }
            };
        walk(j);
    }
}
