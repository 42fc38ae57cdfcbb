#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wigcav/cavity.hpp"
#include "wigcav/verify.hpp"

namespace wigcav {

inline constexpr const char* kToolName = "wigcav";
inline constexpr const char* kToolVersion = "0.1.0";

struct CheckResult {
    std::string name;
    double residual;
    double tolerance;
    bool pass;
};

/// Machine-readable record of one command invocation. Serialization is
/// deterministic: no timestamps, insertion-ordered keys, matrices as
/// row-major nested arrays.
struct RunReport {
    std::string command;
    nlohmann::ordered_json inputs;
    nlohmann::ordered_json outputs;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

void add_check(RunReport& report, std::string name, double residual, double tolerance);

nlohmann::ordered_json matrix_json(const LorentzMat& m);
nlohmann::ordered_json matrix_json(const SpMat& m);

/// Lossless decimal rendering (17 significant digits).
std::string fmt17(double v);

/// Three-boost analysis: lambda, Omega by formula and by the 4x4 product
/// oracle, big_theta, the three boosts and their 2x2 counterparts.
/// Angles in the report are degrees when `degrees` is set (inputs are then
/// interpreted as degrees too); rapidities are always dimensionless.
RunReport cmd_wigner(double eta, double theta, bool degrees);

/// Cavity analysis: stability verdict, (phi, xi), escort/core, accumulated
/// Wigner angle 2*trips*phi, and the N-trip matrix by closed form and by
/// iteration. trips >= 0; unstable cavities are analyzed, not rejected.
RunReport cmd_cavity(const CavityConfig& cfg, long trips);

struct TraceResult {
    RunReport report;
    std::string csv;  // header trip,y,slope,wigner_angle then trips+1 rows
};

/// Ray trace over `trips` round trips (trips >= 1). Refuses non-stable
/// cavities unless `force` is set; the closed-form cross-check runs only
/// when stable.
TraceResult cmd_trace(const CavityConfig& cfg, const RayState& start, long trips, bool force);

/// Full invariant sweep; one check per suite.
RunReport cmd_verify(const verify::VerifyOptions& opt);

}  // namespace wigcav
