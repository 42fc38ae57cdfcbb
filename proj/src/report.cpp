#include "wigcav/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "wigcav/lorentz.hpp"
#include "wigcav/sp2.hpp"

namespace wigcav {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

std::string num(const nlohmann::ordered_json& v) { return v.dump(); }

void render_value(std::ostringstream& os, const std::string& key,
                  const nlohmann::ordered_json& v, const char* indent) {
    if (v.is_array() && !v.empty() && v.front().is_array()) {
        os << indent << key << " =\n";
        for (const auto& row : v) {
            os << indent << "  [";
            for (const auto& entry : row) os << ' ' << num(entry);
            os << " ]\n";
        }
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
        os << indent << key << ":\n";
        for (const auto& item : v) {
            os << indent << " ";
            for (auto it = item.begin(); it != item.end(); ++it) {
                os << ' ' << it.key() << '=' << num(it.value());
            }
            os << '\n';
        }
    } else if (v.is_string()) {
        os << indent << key << " = " << v.get<std::string>() << '\n';
    } else {
        os << indent << key << " = " << num(v) << '\n';
    }
}

}  // namespace

bool RunReport::all_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

nlohmann::ordered_json RunReport::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["meta"] = {{"tool", kToolName}, {"version", kToolVersion}};
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        arr.push_back({{"name", c.name},
                       {"residual", c.residual},
                       {"tolerance", c.tolerance},
                       {"pass", c.pass}});
    }
    j["checks"] = arr;
    return j;
}

std::string RunReport::to_text() const {
    std::ostringstream os;
    os << command << " (" << kToolName << ' ' << kToolVersion << ")\n";
    os << "inputs:\n";
    for (auto it = inputs.begin(); it != inputs.end(); ++it) {
        render_value(os, it.key(), it.value(), "  ");
    }
    os << "outputs:\n";
    for (auto it = outputs.begin(); it != outputs.end(); ++it) {
        render_value(os, it.key(), it.value(), "  ");
    }
    if (!checks.empty()) {
        os << "checks:\n";
        for (const auto& c : checks) {
            char line[160];
            std::snprintf(line, sizeof line, "  [%s] %-32s residual=%.3e tol=%.0e\n",
                          c.pass ? "PASS" : "FAIL", c.name.c_str(), c.residual, c.tolerance);
            os << line;
        }
    }
    return os.str();
}

void add_check(RunReport& report, std::string name, double residual, double tolerance) {
    report.checks.push_back(CheckResult{std::move(name), residual, tolerance,
                                        residual < tolerance});
}

nlohmann::ordered_json matrix_json(const LorentzMat& m) {
    auto j = nlohmann::ordered_json::array();
    for (int r = 0; r < 4; ++r) {
        auto row = nlohmann::ordered_json::array();
        for (int c = 0; c < 4; ++c) row.push_back(m(r, c));
        j.push_back(row);
    }
    return j;
}

nlohmann::ordered_json matrix_json(const SpMat& m) {
    auto j = nlohmann::ordered_json::array();
    for (int r = 0; r < 2; ++r) {
        auto row = nlohmann::ordered_json::array();
        for (int c = 0; c < 2; ++c) row.push_back(m(r, c));
        j.push_back(row);
    }
    return j;
}

std::string fmt17(double v) {
    if (v == 0.0) v = 0.0;  // canonicalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

RunReport cmd_wigner(double eta, double theta, bool degrees) {
    if (!std::isfinite(eta) || !std::isfinite(theta)) {
        throw std::invalid_argument("eta and theta must be finite");
    }
    const double theta_rad = degrees ? theta / kDegPerRad : theta;
    const double out_scale = degrees ? kDegPerRad : 1.0;
    const BoostTriangle tri = BoostTriangle::from(eta, theta_rad);

    const LorentzMat b1 = boost_z(eta);
    const LorentzMat b2 = boost_b2(eta, theta_rad);
    const LorentzMat b3 = boost_b3(eta, theta_rad);
    const LorentzMat prod = closure_product(eta, theta_rad);
    const double omega_oracle = extract_rotation_angle(prod);

    RunReport report;
    report.command = "wigner";
    report.inputs = {{"eta", eta},
                     {"theta", theta},
                     {"angle_unit", degrees ? "degrees" : "radians"}};
    report.outputs = {{"lambda", tri.lambda},
                      {"omega_formula", tri.omega * out_scale},
                      {"omega_oracle", omega_oracle * out_scale},
                      {"omega_delta", std::fabs(tri.omega - omega_oracle) * out_scale},
                      {"big_theta", tri.big_theta * out_scale},
                      {"b1", matrix_json(b1)},
                      {"b2", matrix_json(b2)},
                      {"b3", matrix_json(b3)},
                      {"s1", matrix_json(squeeze_z(eta))},
                      {"s2", matrix_json(s2(eta, theta_rad))},
                      {"s3", matrix_json(s3(eta, theta_rad))}};

    add_check(report, "omega_formula_vs_oracle", std::fabs(tri.omega - omega_oracle), 1e-10);
    const FourVector pa{1.0, 0.0, 0.0, 0.0};
    const FourVector pb{std::cosh(eta), std::sinh(eta), 0.0, 0.0};
    const FourVector pc{std::cosh(eta), std::sinh(eta) * std::cos(theta_rad),
                        std::sinh(eta) * std::sin(theta_rad), 0.0};
    const double triangle =
        std::max({max_abs_diff(apply(b1, pa), pb), max_abs_diff(apply(b2, pb), pc),
                  max_abs_diff(apply(b3, pc), pa)});
    add_check(report, "triangle_closes", triangle, 1e-12);
    add_check(report, "closure_is_rotation", max_abs_diff(prod, rotation_y(tri.omega)), 1e-10);
    add_check(report, "sp2_closure_matches",
              max_abs_diff(normalize_sign(closure2(eta, theta_rad)),
                           normalize_sign(rot2(tri.omega))),
              1e-11);
    const double metric = std::max(
        {b1.metric_residual(), b2.metric_residual(), b3.metric_residual()});
    add_check(report, "metric_preserved", metric, 1e-12);
    return report;
}

RunReport cmd_cavity(const CavityConfig& cfg, long trips) {
    if (trips < 0) throw std::invalid_argument("trips must be >= 0");
    const StabilityReport stab = analyze_stability(cfg);
    const SpMat rt = round_trip(cfg);

    RunReport report;
    report.command = "cavity";
    report.inputs = {{"d", cfg.d}, {"radius", cfg.radius}, {"trips", trips}};
    report.outputs = {{"verdict", to_string(stab.verdict)},
                      {"d_over_radius", cfg.ratio()},
                      {"trace", stab.trace},
                      {"round_trip", matrix_json(rt)}};
    if (stab.phi) {
        report.outputs["phi_rad"] = *stab.phi;
        report.outputs["phi_deg"] = *stab.phi * kDegPerRad;
    }
    add_check(report, "round_trip_det", std::fabs(rt.det() - 1.0), 1e-13);

    if (stab.verdict == Stability::stable) {
        const CoreDecomp dec = escort_core(cfg);
        report.outputs["xi"] = dec.xi;
        report.outputs["exp_2xi"] = std::exp(2.0 * dec.xi);
        report.outputs["escort"] = matrix_json(dec.escort);
        report.outputs["core"] = matrix_json(dec.core);
        report.outputs["accumulated_wigner_angle"] = 2.0 * static_cast<double>(trips) * dec.phi;

        add_check(report, "reassembly",
                  max_abs_diff(dec.escort * (dec.core * dec.core) * dec.escort.inverse(), rt),
                  1e-12);
        const SpMat hc = half_cycle(cfg);
        add_check(report, "midpoint_conjugation",
                  max_abs_diff(translation_matrix(-cfg.d / 2.0) * (hc * hc) *
                                   translation_matrix(cfg.d / 2.0),
                               rt),
                  1e-12);
        const double sq = std::sqrt(cfg.d);
        const SpMat scale(sq, 0.0, 0.0, 1.0 / sq);
        add_check(report, "scaling_identity",
                  max_abs_diff(scale * dec.core * scale.inverse(), hc), 1e-13);
        const SpMat rebuilt(std::cos(dec.phi), -std::exp(dec.xi) * std::sin(dec.phi),
                            std::exp(-dec.xi) * std::sin(dec.phi), std::cos(dec.phi));
        add_check(report, "canonical_rebuild", max_abs_diff(rebuilt, dec.core), 1e-13);

        if (trips >= 1) {
            const SpMat closed = n_round_trips(cfg, trips);
            const SpMat iterated = matrix_power(rt, static_cast<unsigned long>(trips));
            report.outputs["n_trip_closed"] = matrix_json(closed);
            report.outputs["n_trip_iterated"] = matrix_json(iterated);
            add_check(report, "n_trip_closed_vs_iterated", max_abs_diff(closed, iterated),
                      1e-9);
        }
    } else if (stab.verdict == Stability::marginal) {
        add_check(report, "trace_at_boundary", std::fabs(std::fabs(stab.trace) - 2.0), 1e-12);
    } else {
        add_check(report, "trace_exceeds_2", std::max(0.0, 2.0 - std::fabs(stab.trace)),
                  1e-12);
    }
    return report;
}

TraceResult cmd_trace(const CavityConfig& cfg, const RayState& start, long trips, bool force) {
    if (trips < 1) throw std::invalid_argument("trips must be >= 1");
    if (!std::isfinite(start.y) || !std::isfinite(start.slope)) {
        throw std::invalid_argument("initial ray must be finite");
    }
    const StabilityReport stab = analyze_stability(cfg);
    if (stab.verdict != Stability::stable && !force) {
        throw unstable_cavity_error(cfg, stab.phi, stab.verdict == Stability::marginal);
    }
    const SpMat rt = round_trip(cfg);

    std::string csv = "trip,y,slope,wigner_angle\n";
    RayState ray = start;
    double max_y = std::fabs(ray.y);
    for (long n = 0; n <= trips; ++n) {
        const double angle = stab.phi ? 2.0 * static_cast<double>(n) * *stab.phi
                                      : std::nan("");
        csv += std::to_string(n) + ',' + fmt17(ray.y) + ',' + fmt17(ray.slope) + ',' +
               fmt17(angle) + '\n';
        if (n < trips) {
            ray = propagate_ray(rt, ray);
            max_y = std::max(max_y, std::fabs(ray.y));
        }
    }

    TraceResult result;
    result.csv = std::move(csv);
    RunReport& report = result.report;
    report.command = "trace";
    report.inputs = {{"d", cfg.d},       {"radius", cfg.radius}, {"y0", start.y},
                     {"slope0", start.slope}, {"trips", trips},  {"force", force}};
    report.outputs = {{"verdict", to_string(stab.verdict)},
                      {"rows", trips + 1},
                      {"final_y", ray.y},
                      {"final_slope", ray.slope},
                      {"max_abs_y", max_y}};

    if (stab.verdict == Stability::stable) {
        const RayState closed = propagate_ray(n_round_trips(cfg, trips), start);
        add_check(report, "final_vs_closed_form",
                  std::max(std::fabs(closed.y - ray.y), std::fabs(closed.slope - ray.slope)),
                  1e-9);
        const double bound = orbit_bound(cfg, start);
        report.outputs["orbit_bound"] = bound;
        add_check(report, "orbit_within_bound", std::max(0.0, max_y - bound), 1e-9);
    }
    return result;
}

RunReport cmd_verify(const verify::VerifyOptions& opt) {
    if (opt.grid < 2) throw std::invalid_argument("grid density must be >= 2");
    if (opt.tol_override && !(*opt.tol_override > 0.0)) {
        throw std::invalid_argument("tolerance must be > 0");
    }
    const auto suites = verify::run_suites(opt);

    RunReport report;
    report.command = "verify";
    report.inputs = {{"grid", opt.grid}};
    if (opt.tol_override) {
        report.inputs["tolerance"] = *opt.tol_override;
    } else {
        report.inputs["tolerance"] = "per-suite defaults";
    }
    auto arr = nlohmann::ordered_json::array();
    for (const auto& s : suites) {
        arr.push_back({{"suite", s.suite},
                       {"max_residual", s.max_residual},
                       {"tolerance", s.tolerance},
                       {"pass", s.pass},
                       {"worst_point", s.worst_point}});
        report.checks.push_back(CheckResult{s.suite + " @ " + s.worst_point, s.max_residual,
                                            s.tolerance, s.pass});
    }
    report.outputs = {{"suites", arr}};
    return report;
}

}  // namespace wigcav
