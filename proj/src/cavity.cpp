#include "wigcav/cavity.hpp"

#include <cmath>

namespace wigcav {

namespace {

std::string describe(const CavityConfig& cfg, bool marginal) {
    return std::string(marginal ? "marginal" : "unstable") + " cavity: d = " +
           std::to_string(cfg.d) + ", R = " + std::to_string(cfg.radius) +
           " (stability needs 0 < d < 2R)";
}

}  // namespace

CavityConfig::CavityConfig(double d_, double radius_) : d(d_), radius(radius_) {
    if (!std::isfinite(d) || d <= 0.0) {
        throw std::invalid_argument("mirror separation d must be finite and > 0");
    }
    if (!std::isfinite(radius) || radius <= 0.0) {
        throw std::invalid_argument("mirror radius must be finite and > 0");
    }
}

const char* to_string(Stability s) {
    switch (s) {
        case Stability::stable: return "stable";
        case Stability::marginal: return "marginal";
        case Stability::unstable: return "unstable";
    }
    return "?";
}

unstable_cavity_error::unstable_cavity_error(const CavityConfig& cfg,
                                             std::optional<double> phi, bool marginal)
    : std::domain_error(describe(cfg, marginal)), phi_(phi), marginal_(marginal) {}

SpMat mirror_matrix(double radius) {
    if (!std::isfinite(radius) || radius <= 0.0) {
        throw std::invalid_argument("mirror radius must be finite and > 0");
    }
    return SpMat(1.0, 0.0, -2.0 / radius, 1.0);
}

SpMat translation_matrix(double length_param) {
    if (!std::isfinite(length_param)) {
        throw std::invalid_argument("translation length must be finite");
    }
    return SpMat(1.0, length_param, 0.0, 1.0);
}

SpMat round_trip(const CavityConfig& cfg) {
    const SpMat m = mirror_matrix(cfg.radius);
    const SpMat t = translation_matrix(cfg.d);
    return m * (t * (m * t));
}

SpMat half_cycle(const CavityConfig& cfg) {
    const double u = cfg.ratio();
    return SpMat(1.0 - u, cfg.d - cfg.d * cfg.d / (2.0 * cfg.radius), -2.0 / cfg.radius,
                 1.0 - u);
}

namespace {

SpMat core_matrix(const CavityConfig& cfg) {
    const double u = cfg.ratio();
    return SpMat(1.0 - u, 1.0 - u / 2.0, -2.0 * u, 1.0 - u);
}

SpMat escort_matrix(const CavityConfig& cfg) {
    const double sq = std::sqrt(cfg.d);
    return translation_matrix(-cfg.d / 2.0) * SpMat(sq, 0.0, 0.0, 1.0 / sq);
}

double phi_of(const CavityConfig& cfg, double xi) {
    const SpMat c = core_matrix(cfg);
    // de-squeezed lower-left entry is sin(phi); negative for 0 < d < 2R
    return std::atan2(c(1, 0) * std::exp(xi), c(0, 0));
}

struct Classified {
    Stability verdict;
    std::optional<double> phi;
    std::optional<double> xi;
};

Classified classify(const CavityConfig& cfg) {
    const double u = cfg.ratio();
    if (u > 2.0) return {Stability::unstable, std::nullopt, std::nullopt};
    // R/2d - 1/4 rewritten cancellation-free; exact sign all the way to the
    // stability boundary
    const double e2xi = (2.0 * cfg.radius - cfg.d) / (4.0 * cfg.d);
    if (u == 2.0 || e2xi <= 0.0) {
        return {Stability::marginal, std::acos(std::max(1.0 - u, -1.0)), std::nullopt};
    }
    const double xi = 0.5 * std::log(e2xi);
    return {Stability::stable, phi_of(cfg, xi), xi};
}

}  // namespace

StabilityReport analyze_stability(const CavityConfig& cfg) {
    const Classified c = classify(cfg);
    return StabilityReport{c.verdict, round_trip(cfg).trace(), c.phi, c.xi};
}

std::pair<double, double> core_canonical(const CavityConfig& cfg) {
    const Classified c = classify(cfg);
    if (c.verdict != Stability::stable) {
        throw unstable_cavity_error(cfg, c.phi, c.verdict == Stability::marginal);
    }
    return {*c.phi, *c.xi};
}

CoreDecomp escort_core(const CavityConfig& cfg) {
    const auto [phi, xi] = core_canonical(cfg);
    return CoreDecomp{phi, xi, escort_matrix(cfg), core_matrix(cfg)};
}

WignerFactors wigner_decomposition(double phi, double xi) {
    if (!std::isfinite(phi) || !std::isfinite(xi)) {
        throw std::invalid_argument("phi and xi must be finite");
    }
    const double e = std::exp(xi / 2.0);
    return WignerFactors{SpMat(e, 0.0, 0.0, 1.0 / e),
                         SpMat(std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi)),
                         SpMat(1.0 / e, 0.0, 0.0, e)};
}

SpMat core_power(double phi, double xi, long k) {
    const double a = static_cast<double>(k) * phi;
    const double c = std::cos(a);
    const double s = std::sin(a);
    return SpMat(c, -std::exp(xi) * s, std::exp(-xi) * s, c);
}

SpMat n_round_trips(const CavityConfig& cfg, long n) {
    if (n < 1) throw std::invalid_argument("trip count must be >= 1");
    const CoreDecomp dec = escort_core(cfg);
    return dec.escort * core_power(dec.phi, dec.xi, 2 * n) * dec.escort.inverse();
}

RayState propagate_ray(const SpMat& m, const RayState& ray) {
    return RayState{m(0, 0) * ray.y + m(0, 1) * ray.slope,
                    m(1, 0) * ray.y + m(1, 1) * ray.slope};
}

double orbit_bound(const CavityConfig& cfg, const RayState& ray) {
    const CoreDecomp dec = escort_core(cfg);
    const SpMat einv = dec.escort.inverse();
    const double w0 = einv(0, 0) * ray.y + einv(0, 1) * ray.slope;
    const double w1 = einv(1, 0) * ray.y + einv(1, 1) * ray.slope;
    const double half = dec.xi / 2.0;
    // ellipse radius of the de-squeezed core orbit
    const double radius = std::hypot(w0 * std::exp(-half), w1 * std::exp(half));
    const double row_y = std::hypot(dec.escort(0, 0), dec.escort(0, 1));
    return row_y * std::exp(std::fabs(half)) * radius;
}

}  // namespace wigcav
