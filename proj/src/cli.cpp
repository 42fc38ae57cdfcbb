#include "wigcav/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "wigcav/report.hpp"

namespace wigcav {

namespace {

void print_report(const RunReport& report, bool json, std::ostream& out) {
    if (json) {
        out << report.to_json().dump(2) << '\n';
    } else {
        out << report.to_text();
    }
}

int finish(const RunReport& report, std::ostream& err) {
    if (report.all_pass()) return 0;
    for (const auto& c : report.checks) {
        if (!c.pass) {
            err << "check failed: " << c.name << " (residual " << c.residual << ", tolerance "
                << c.tolerance << ")\n";
        }
    }
    return 2;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Wigner-rotation and two-mirror cavity ABCD analysis"};
    app.name("wigcav");
    app.require_subcommand(1);

    double eta = 0.0, theta = 0.0;
    bool degrees = false, as_json = false;
    auto* wigner = app.add_subcommand(
        "wigner", "Three-boost closure: lambda, Wigner angle, boost matrices");
    wigner->add_option("--eta", eta, "Rapidity of the first boost")->required();
    wigner->add_option("--theta", theta, "Rotation angle between the momenta")->required();
    wigner->add_flag("--degrees", degrees, "Angles in degrees (input and output)");
    wigner->add_flag("--json", as_json, "Machine-readable JSON on stdout");

    double cav_d = 0.0, cav_r = 0.0;
    long cav_trips = 1;
    bool cav_json = false;
    auto* cavity = app.add_subcommand(
        "cavity", "Round-trip, escort/core decomposition and stability analysis");
    cavity->add_option("--d", cav_d, "Mirror separation")->required();
    cavity->add_option("--radius", cav_r, "Mirror radius of curvature")->required();
    cavity->add_option("--trips", cav_trips, "Round trips for the N-trip matrix (default 1)")
        ->check(CLI::NonNegativeNumber);
    cavity->add_flag("--json", cav_json, "Machine-readable JSON on stdout");

    double tr_d = 0.0, tr_r = 0.0, tr_y0 = 0.0, tr_slope0 = 0.0;
    long tr_trips = 0;
    std::string csv_path;
    bool tr_force = false;
    auto* trace = app.add_subcommand("trace", "Per-trip ray positions as CSV");
    trace->add_option("--d", tr_d, "Mirror separation")->required();
    trace->add_option("--radius", tr_r, "Mirror radius of curvature")->required();
    trace->add_option("--y0", tr_y0, "Initial displacement")->required();
    trace->add_option("--slope0", tr_slope0, "Initial slope")->required();
    trace->add_option("--trips", tr_trips, "Number of round trips")
        ->required()
        ->check(CLI::PositiveNumber);
    trace->add_option("--csv", csv_path, "Write CSV to this file instead of stdout");
    trace->add_flag("--force", tr_force, "Trace even when the cavity is not stable");

    int grid = 12;
    double tol_value = 0.0;
    auto* verify_cmd =
        app.add_subcommand("verify", "Run every invariant suite over the parameter grid");
    verify_cmd->add_option("--grid", grid, "Points per parameter axis (default 12)")
        ->check(CLI::Range(2, 1000));
    auto* tol_opt =
        verify_cmd->add_option("--tol", tol_value, "Override every suite tolerance");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);

        if (wigner->parsed()) {
            const RunReport report = cmd_wigner(eta, theta, degrees);
            print_report(report, as_json, out);
            return finish(report, err);
        }
        if (cavity->parsed()) {
            const RunReport report = cmd_cavity(CavityConfig(cav_d, cav_r), cav_trips);
            print_report(report, cav_json, out);
            return finish(report, err);
        }
        if (trace->parsed()) {
            const TraceResult result =
                cmd_trace(CavityConfig(tr_d, tr_r), RayState{tr_y0, tr_slope0}, tr_trips,
                          tr_force);
            if (csv_path.empty()) {
                out << result.csv;
            } else {
                std::ofstream file(csv_path, std::ios::binary);
                if (!file) {
                    err << "error: cannot open " << csv_path << " for writing\n";
                    return 1;
                }
                file << result.csv;
                print_report(result.report, false, out);
            }
            return finish(result.report, err);
        }
        // verify
        verify::VerifyOptions opt;
        opt.grid = grid;
        if (tol_opt->count() > 0) opt.tol_override = tol_value;
        const RunReport report = cmd_verify(opt);
        for (const auto& c : report.checks) {
            const size_t sep = c.name.find(" @ ");
            const std::string suite = c.name.substr(0, sep);
            const std::string where =
                (c.pass || sep == std::string::npos) ? "" : "  at " + c.name.substr(sep + 3);
            char line[240];
            std::snprintf(line, sizeof line, "[%s] %-30s max residual %.3e  tol %.0e%s\n",
                          c.pass ? "PASS" : "FAIL", suite.c_str(), c.residual, c.tolerance,
                          where.c_str());
            out << line;
        }
        const size_t passed = static_cast<size_t>(
            std::count_if(report.checks.begin(), report.checks.end(),
                          [](const CheckResult& c) { return c.pass; }));
        out << "verify: " << passed << '/' << report.checks.size() << " suites passed (grid "
            << grid << ")\n";
        if (!report.all_pass()) {
            err << "verification failed\n";
            return 2;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 1;
    } catch (const unstable_cavity_error& e) {
        err << "error: " << e.what() << "\n"
            << "a ray trace would diverge; pass --force to trace anyway\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace wigcav
