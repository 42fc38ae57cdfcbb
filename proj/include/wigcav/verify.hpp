#pragma once

#include <optional>
#include <string>
#include <vector>

namespace wigcav::verify {

/// One invariant suite swept over the parameter grid.
struct SuiteResult {
    std::string suite;
    double max_residual;
    double tolerance;
    bool pass;
    std::string worst_point;  // parameters at the largest residual
};

struct VerifyOptions {
    int grid = 12;                       // points per parameter axis, >= 2
    std::optional<double> tol_override;  // replaces every suite tolerance
};

/// Runs every invariant suite of the three kernels over the grid:
/// eta in [0, 3], theta in [0, 11pi/12], d/R in [0.1, 1.9], each sampled
/// with `grid` points. Deterministic sweep order and results.
std::vector<SuiteResult> run_suites(const VerifyOptions& opt);

/// True when every suite passed.
bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace wigcav::verify
