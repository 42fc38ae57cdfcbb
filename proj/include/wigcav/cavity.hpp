#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "wigcav/sp2.hpp"

namespace wigcav {

/// Symmetric two-mirror cavity: identical concave mirrors of curvature
/// radius `radius` separated by `d`. Both lengths share one arbitrary unit.
struct CavityConfig {
    double d;
    double radius;

    /// Throws std::invalid_argument unless both parameters are finite and > 0.
    CavityConfig(double d, double radius);

    double ratio() const { return d / radius; }
};

/// Transverse ray: displacement y from the axis (length units) and
/// dimensionless paraxial slope.
struct RayState {
    double y = 0.0;
    double slope = 0.0;
};

enum class Stability { stable, marginal, unstable };

const char* to_string(Stability s);

/// Raised when a decomposition needs the strict stability 0 < d < 2R.
/// Carries phi where it still exists (d <= 2R) and whether the cavity sits
/// exactly on the marginal boundary d = 2R.
class unstable_cavity_error : public std::domain_error {
public:
    unstable_cavity_error(const CavityConfig& cfg, std::optional<double> phi, bool marginal);
    std::optional<double> phi() const { return phi_; }
    bool marginal() const { return marginal_; }

private:
    std::optional<double> phi_;
    bool marginal_;
};

/// Escort/core factorization of the round trip: round_trip = E C^2 E^-1
/// with E = T(-d/2) diag(sqrt(d), 1/sqrt(d)) and the dimensionless core
///   C = [[1 - d/R, 1 - d/2R], [-2d/R, 1 - d/R]]
///     = [[cos phi, -e^xi sin phi], [e^{-xi} sin phi, cos phi]],
/// cos phi = 1 - d/R, e^{2 xi} = R/2d - 1/4.
struct CoreDecomp {
    double phi;
    double xi;
    SpMat escort;
    SpMat core;
};

/// Squeeze / rotation / unsqueeze factors whose product rebuilds the core:
/// diag(e^{xi/2}, e^{-xi/2}) [[cos phi, -sin phi],[sin phi, cos phi]]
/// diag(e^{-xi/2}, e^{xi/2}).
struct WignerFactors {
    SpMat squeeze;
    SpMat rotation;
    SpMat unsqueeze;
};

/// Reflection from a mirror of curvature radius R: [[1, 0], [-2/R, 1]].
SpMat mirror_matrix(double radius);

/// Free propagation over the given length (negative allowed): [[1, L], [0, 1]].
SpMat translation_matrix(double length_param);

/// One full round trip starting at a mirror: M T M T.
SpMat round_trip(const CavityConfig& cfg);

/// Half-cycle seen from the cavity midpoint: T(d/2) M T(d/2) =
/// [[1 - d/R, d - d^2/2R], [-2/R, 1 - d/R]]. Satisfies
/// T(-d/2) half_cycle^2 T(d/2) = round_trip.
SpMat half_cycle(const CavityConfig& cfg);

/// Classifies the cavity and reports trace, phi and xi where defined
/// (phi for d <= 2R, xi for d < 2R). Never throws on valid configs.
struct StabilityReport {
    Stability verdict;
    double trace;
    std::optional<double> phi;
    std::optional<double> xi;
};

StabilityReport analyze_stability(const CavityConfig& cfg);

/// (phi, xi) of the core canonical form. phi keeps the sign of sin phi from
/// the core's entries (negative throughout 0 < d < 2R), via atan2 of the
/// de-squeezed core, never acos alone. Throws unstable_cavity_error for
/// d >= 2R (marginal flag set at exactly d = 2R).
std::pair<double, double> core_canonical(const CavityConfig& cfg);

/// Full escort/core decomposition; throws unstable_cavity_error for d >= 2R.
CoreDecomp escort_core(const CavityConfig& cfg);

/// The three Wigner factors for given (phi, xi).
WignerFactors wigner_decomposition(double phi, double xi);

/// Closed-form core power C^k = [[cos(k phi), -e^xi sin(k phi)],
/// [e^{-xi} sin(k phi), cos(k phi)]].
SpMat core_power(double phi, double xi, long k);

/// N round trips via the closed form: E C^{2N} E^-1. n >= 1; throws
/// unstable_cavity_error for d >= 2R.
SpMat n_round_trips(const CavityConfig& cfg, long n);

/// ABCD action on a ray.
RayState propagate_ray(const SpMat& m, const RayState& ray);

/// Rigorous bound on |y| over all round trips from the given start: the core
/// orbit lies on the ellipse ||diag(e^{-xi/2}, e^{xi/2}) u||_2 = const, so
/// |y_n| <= ||E row_y||_2 * e^{|xi|/2} * ||S^-1 E^-1 ray||_2. Stable cavities
/// only.
double orbit_bound(const CavityConfig& cfg, const RayState& ray);

}  // namespace wigcav
