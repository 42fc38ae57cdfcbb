#include "wigcav/verify.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "wigcav/cavity.hpp"
#include "wigcav/lorentz.hpp"
#include "wigcav/sp2.hpp"

namespace wigcav::verify {

namespace {

std::string point(const char* fmt, double a, double b = 0.0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, a, b);
    return buf;
}

// worst-residual tracker for one suite
class Acc {
public:
    void note(double residual, const std::string& where) {
        if (residual > worst_) {
            worst_ = residual;
            where_ = where;
        }
    }
    SuiteResult finish(std::string name, double tol,
                       const std::optional<double>& override_tol) const {
        const double t = override_tol.value_or(tol);
        return SuiteResult{std::move(name), worst_, t, worst_ < t, where_};
    }

private:
    double worst_ = 0.0;
    std::string where_ = "-";
};

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    return out;
}

double det_residual(const LorentzMat& m) { return std::fabs(m.det() - 1.0); }

}  // namespace

std::vector<SuiteResult> run_suites(const VerifyOptions& opt) {
    const int n = std::max(2, opt.grid);
    const auto& tol = opt.tol_override;
    const auto etas = linspace(0.0, 3.0, n);
    const auto thetas = linspace(0.0, 11.0 * std::numbers::pi / 12.0, n);
    const auto ratios = linspace(0.1, 1.9, n);

    std::vector<SuiteResult> results;

    // --- lorentz-kernel ---------------------------------------------------
    Acc metric, metric_composed, closure, triangle, little, extraction, thomas;
    for (double eta : etas) {
        for (double theta : thetas) {
            const auto where = point("eta=%.6g theta=%.6g", eta, theta);
            const LorentzMat b1 = boost_z(eta);
            const LorentzMat b2 = boost_b2(eta, theta);
            const LorentzMat b3 = boost_b3(eta, theta);
            const LorentzMat prod = closure_product(eta, theta);
            const double omega = wigner_angle(eta, theta);
            for (const LorentzMat* m : {&b1, &b2, &b3}) {
                // rounding of entries ~e^lambda makes the raw residual scale
                // with the squared norm; normalize so the unit-scale
                // tolerance applies everywhere
                const double scale = std::max(1.0, m->max_norm() * m->max_norm());
                metric.note(m->metric_residual() / scale, where);
                metric.note(det_residual(*m) / scale, where);
            }
            // triple products pass through intermediates of magnitude
            // ~e^{lambda+eta}; they carry the composed-product tolerance
            const LorentzMat stab = stabilizer_product(eta, theta);
            for (const LorentzMat* m : {&prod, &stab}) {
                metric_composed.note(m->metric_residual(), where);
                metric_composed.note(det_residual(*m), where);
            }
            closure.note(max_abs_diff(prod, rotation_y(omega)), where);

            const FourVector pa{1.0, 0.0, 0.0, 0.0};
            const FourVector pb{std::cosh(eta), std::sinh(eta), 0.0, 0.0};
            const FourVector pc{std::cosh(eta), std::sinh(eta) * std::cos(theta),
                                std::sinh(eta) * std::sin(theta), 0.0};
            triangle.note(max_abs_diff(apply(b1, pa), pb), where);
            triangle.note(max_abs_diff(apply(b2, pb), pc), where);
            triangle.note(max_abs_diff(apply(b3, pc), pa), where);

            // little-group chain: B1 R(Omega-theta) B1^-1 = R(-theta) B2 and
            // R(theta) R(Omega-theta) = B3 B2 B1; both stabilizers fix P_b.
            const LorentzMat conj = little_group_conjugate(eta, omega - theta);
            little.note(max_abs_diff(conj, rotation_y(-theta) * b2), where);
            little.note(max_abs_diff(rotation_y(theta) * rotation_y(omega - theta), prod),
                        where);
            little.note(max_abs_diff(apply(conj, pb), pb), where);
            little.note(max_abs_diff(apply(stabilizer_product(eta, theta), pb), pb), where);
        }
    }
    for (int i = -2 * n + 1; i <= 2 * n; ++i) {
        // a = pi * (i / 2n) stays inside the (-pi, pi] extraction domain
        const double a = std::numbers::pi * (static_cast<double>(i) / (2.0 * n));
        extraction.note(std::fabs(extract_rotation_angle(rotation_y(a)) - a),
                        point("angle=%.6g", a));
    }
    for (double eta : {0.001, 0.005, 0.01}) {
        for (double theta : thetas) {
            const double err =
                std::fabs(wigner_angle(eta, theta) - 0.5 * eta * eta * std::sin(theta));
            thomas.note(err / (10.0 * eta * eta * eta * eta),
                        point("eta=%.6g theta=%.6g", eta, theta));
        }
    }
    results.push_back(metric.finish("lorentz.metric_det", 1e-12, tol));
    results.push_back(metric_composed.finish("lorentz.metric_det_composed", 1e-10, tol));
    results.push_back(closure.finish("lorentz.closure", 1e-10, tol));
    results.push_back(triangle.finish("lorentz.triangle", 1e-12, tol));
    results.push_back(little.finish("lorentz.little_group", 1e-10, tol));
    results.push_back(extraction.finish("lorentz.angle_extraction", 1e-14, tol));
    results.push_back(thomas.finish("lorentz.thomas_limit", 1.0, tol));

    // --- sp2-kernel ---------------------------------------------------------
    Acc unimodular, hom_gen, hom_all, representation, closure2x2, power_law;
    {
        std::vector<std::pair<SpMat, std::string>> gens;      // squeeze_z, rot2
        std::vector<std::pair<SpMat, std::string>> derived;   // s2, s3
        for (double eta : etas) gens.emplace_back(squeeze_z(eta), point("squeeze(%.6g)", eta));
        for (double theta : thetas) gens.emplace_back(rot2(theta), point("rot2(%.6g)", theta));
        for (double eta : etas) {
            for (double theta : thetas) {
                derived.emplace_back(s2(eta, theta), point("s2(%.6g,%.6g)", eta, theta));
                derived.emplace_back(s3(eta, theta), point("s3(%.6g,%.6g)", eta, theta));
            }
        }
        for (const auto& [g, where] : gens) unimodular.note(std::fabs(g.det() - 1.0), where);
        for (const auto& [g, where] : derived) unimodular.note(std::fabs(g.det() - 1.0), where);

        auto pair_residual = [](const SpMat& a, const SpMat& b) {
            return max_abs_diff(covering_map(a * b), covering_map(a) * covering_map(b));
        };
        for (const auto& [g1, w1] : gens) {
            for (const auto& [g2, w2] : gens) {
                const double r = pair_residual(g1, g2);
                hom_gen.note(r, w1 + " x " + w2);
                hom_all.note(r, w1 + " x " + w2);
                unimodular.note(std::fabs((g1 * g2).det() - 1.0), w1 + " x " + w2);
            }
        }
        // composed elements carry larger magnitudes; checked at the
        // composed-product tolerance. The pairwise sweep is quartic in the
        // grid density, so stride-sample the derived family above 512
        // elements to keep large grids interactive.
        std::vector<std::pair<SpMat, std::string>> sampled;
        const size_t stride = derived.size() > 512 ? (derived.size() + 511) / 512 : 1;
        for (size_t i = 0; i < derived.size(); i += stride) sampled.push_back(derived[i]);
        auto sweep_vs = [&](const std::vector<std::pair<SpMat, std::string>>& lhs,
                            const std::vector<std::pair<SpMat, std::string>>& rhs) {
            for (const auto& [g1, w1] : lhs)
                for (const auto& [g2, w2] : rhs) hom_all.note(pair_residual(g1, g2), w1 + " x " + w2);
        };
        sweep_vs(sampled, gens);
        sweep_vs(gens, sampled);
        sweep_vs(sampled, sampled);
    }
    for (double eta : etas) {
        for (double theta : thetas) {
            const auto where = point("eta=%.6g theta=%.6g", eta, theta);
            representation.note(max_abs_diff(covering_map(squeeze_z(eta)), boost_z(eta)), where);
            representation.note(max_abs_diff(covering_map(rot2(theta)), rotation_y(theta)),
                                where);
            representation.note(max_abs_diff(covering_map(s2(eta, theta)), boost_b2(eta, theta)),
                                where);
            representation.note(max_abs_diff(covering_map(s3(eta, theta)), boost_b3(eta, theta)),
                                where);
            closure2x2.note(max_abs_diff(normalize_sign(closure2(eta, theta)),
                                         normalize_sign(rot2(wigner_angle(eta, theta)))),
                            where);
            const SpMat step = sandwich(eta, theta);
            SpMat acc;
            for (int k = 1; k <= 64; ++k) {
                acc = acc * step;
                power_law.note(max_abs_diff(acc, sandwich(eta, k * theta)),
                               point("eta=%.6g N*theta=%.6g", eta, k * theta));
            }
        }
    }
    results.push_back(unimodular.finish("sp2.unimodular", 1e-13, tol));
    results.push_back(hom_gen.finish("sp2.homomorphism_generators", 1e-12, tol));
    results.push_back(hom_all.finish("sp2.homomorphism_all", 1e-10, tol));
    results.push_back(representation.finish("sp2.representation", 1e-11, tol));
    results.push_back(closure2x2.finish("sp2.closure", 1e-11, tol));
    results.push_back(power_law.finish("sp2.power_law", 1e-9, tol));

    // --- cavity-optics ------------------------------------------------------
    Acc reassembly, conjugation, scaling, canonical, cavity_power, stability;
    for (double u : ratios) {
        const CavityConfig cfg(u, 1.0);
        const auto where = point("d/R=%.6g", u);
        const SpMat rt = round_trip(cfg);
        const CoreDecomp dec = escort_core(cfg);
        reassembly.note(
            max_abs_diff(dec.escort * (dec.core * dec.core) * dec.escort.inverse(), rt), where);
        const SpMat hc = half_cycle(cfg);
        conjugation.note(max_abs_diff(translation_matrix(-cfg.d / 2.0) * (hc * hc) *
                                          translation_matrix(cfg.d / 2.0),
                                      rt),
                         where);
        const double sq = std::sqrt(cfg.d);
        const SpMat scale(sq, 0.0, 0.0, 1.0 / sq);
        scaling.note(max_abs_diff(scale * dec.core * scale.inverse(), hc), where);
        const SpMat rebuilt(std::cos(dec.phi), -std::exp(dec.xi) * std::sin(dec.phi),
                            std::exp(-dec.xi) * std::sin(dec.phi), std::cos(dec.phi));
        canonical.note(max_abs_diff(rebuilt, dec.core), where);
        const WignerFactors wf = wigner_decomposition(dec.phi, dec.xi);
        canonical.note(max_abs_diff(wf.squeeze * wf.rotation * wf.unsqueeze, dec.core), where);

        for (long k = 1; k <= 8192; k *= 2) {
            cavity_power.note(max_abs_diff(core_power(dec.phi, dec.xi, 2 * k),
                                           matrix_power(dec.core, 2 * static_cast<unsigned long>(k))),
                              point("d/R=%.6g N=%.6g", u, static_cast<double>(k)));
        }

        // stability side of the dichotomy: |trace| <= 2 and bounded orbits
        stability.note(std::max(0.0, std::fabs(rt.trace()) - 2.0), where);
        const RayState start{0.37, -0.21};
        const double bound = orbit_bound(cfg, start);
        RayState ray = start;
        double worst_y = std::fabs(ray.y);
        for (int trip = 0; trip < 1000; ++trip) {
            ray = propagate_ray(rt, ray);
            worst_y = std::max(worst_y, std::fabs(ray.y));
        }
        stability.note(std::max(0.0, worst_y - bound), where);
    }
    {
        // divergence side at d = 2.5R
        const CavityConfig cfg(2.5, 1.0);
        const SpMat rt = round_trip(cfg);
        const auto where = point("d/R=%.6g", 2.5);
        stability.note(std::max(0.0, 2.0 - std::fabs(rt.trace())), where);
        RayState ray{1.0, 0.0};
        double prev = std::fabs(ray.y);
        bool monotone = true;
        for (int trip = 0; trip < 50; ++trip) {
            ray = propagate_ray(rt, ray);
            if (std::fabs(ray.y) <= prev) monotone = false;
            prev = std::fabs(ray.y);
        }
        stability.note((monotone && prev > 1e6) ? 0.0 : 1.0, where);
    }
    results.push_back(reassembly.finish("cavity.reassembly", 1e-12, tol));
    results.push_back(conjugation.finish("cavity.conjugation", 1e-12, tol));
    results.push_back(scaling.finish("cavity.scaling", 1e-13, tol));
    results.push_back(canonical.finish("cavity.canonical", 1e-13, tol));
    results.push_back(cavity_power.finish("cavity.power", 1e-9, tol));
    results.push_back(stability.finish("cavity.stability", 1e-9, tol));

    return results;
}

bool all_passed(const std::vector<SuiteResult>& results) {
    for (const auto& r : results) {
        if (!r.pass) return false;
    }
    return true;
}

}  // namespace wigcav::verify
