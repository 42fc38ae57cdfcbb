#include "wigcav/lorentz.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace wigcav {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(name) + " must be finite");
    }
}

constexpr std::array<double, 4> kMetric = {1.0, -1.0, -1.0, -1.0};

}  // namespace

double FourVector::minkowski_norm() const {
    return ct * ct - z * z - x * x - y * y;
}

LorentzMat::LorentzMat() : m_{} {
    for (int i = 0; i < 4; ++i) m_[i * 4 + i] = 1.0;
}

LorentzMat LorentzMat::identity() { return LorentzMat(); }

LorentzMat LorentzMat::operator*(const LorentzMat& rhs) const {
    LorentzMat out;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            double acc = 0.0;
            for (int k = 0; k < 4; ++k) acc += (*this)(r, k) * rhs(k, c);
            out(r, c) = acc;
        }
    }
    return out;
}

FourVector LorentzMat::operator*(const FourVector& v) const {
    const std::array<double, 4> in = {v.ct, v.z, v.x, v.y};
    std::array<double, 4> out{};
    for (int r = 0; r < 4; ++r) {
        double acc = 0.0;
        for (int c = 0; c < 4; ++c) acc += (*this)(r, c) * in[c];
        out[r] = acc;
    }
    return {out[0], out[1], out[2], out[3]};
}

LorentzMat LorentzMat::transposed() const {
    LorentzMat out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out(r, c) = (*this)(c, r);
    return out;
}

LorentzMat LorentzMat::inverse() const {
    // g M^T g with g = diag(1,-1,-1,-1): entry (r,c) = g_r g_c M(c,r).
    LorentzMat out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out(r, c) = kMetric[r] * kMetric[c] * (*this)(c, r);
    return out;
}

double LorentzMat::det() const {
    const auto& m = *this;
    auto det3 = [&m](int r0, int r1, int r2, int c0, int c1, int c2) {
        return m(r0, c0) * (m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1)) -
               m(r0, c1) * (m(r1, c0) * m(r2, c2) - m(r1, c2) * m(r2, c0)) +
               m(r0, c2) * (m(r1, c0) * m(r2, c1) - m(r1, c1) * m(r2, c0));
    };
    return m(0, 0) * det3(1, 2, 3, 1, 2, 3) - m(0, 1) * det3(1, 2, 3, 0, 2, 3) +
           m(0, 2) * det3(1, 2, 3, 0, 1, 3) - m(0, 3) * det3(1, 2, 3, 0, 1, 2);
}

double LorentzMat::trace() const {
    return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2) + (*this)(3, 3);
}

double LorentzMat::max_norm() const {
    double worst = 0.0;
    for (double v : m_) worst = std::max(worst, std::fabs(v));
    return worst;
}

double LorentzMat::metric_residual() const {
    double worst = 0.0;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            double acc = 0.0;
            for (int k = 0; k < 4; ++k) acc += (*this)(k, r) * kMetric[k] * (*this)(k, c);
            const double target = (r == c) ? kMetric[r] : 0.0;
            worst = std::max(worst, std::fabs(acc - target));
        }
    }
    return worst;
}

double max_abs_diff(const LorentzMat& a, const LorentzMat& b) {
    double worst = 0.0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) worst = std::max(worst, std::fabs(a(r, c) - b(r, c)));
    return worst;
}

double max_abs_diff(const FourVector& a, const FourVector& b) {
    return std::max(std::max(std::fabs(a.ct - b.ct), std::fabs(a.z - b.z)),
                    std::max(std::fabs(a.x - b.x), std::fabs(a.y - b.y)));
}

not_a_rotation::not_a_rotation(double residual)
    : std::domain_error("matrix is not a (z,x)-plane rotation; block-form residual " +
                        std::to_string(residual)),
      residual_(residual) {}

LorentzMat boost_z(double eta) {
    require_finite(eta, "eta");
    const double ch = std::cosh(eta);
    const double sh = std::sinh(eta);
    LorentzMat b;
    b(0, 0) = ch;
    b(0, 1) = sh;
    b(1, 0) = sh;
    b(1, 1) = ch;
    return b;
}

LorentzMat rotation_y(double theta) {
    require_finite(theta, "theta");
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    LorentzMat r;
    r(1, 1) = c;
    r(1, 2) = -s;
    r(2, 1) = s;
    r(2, 2) = c;
    return r;
}

double lambda_param(double eta, double theta) {
    require_finite(eta, "eta");
    require_finite(theta, "theta");
    // 2 atanh(sin(theta/2) tanh eta) rewritten as a log of a ratio that never
    // cancels:  (1 + s t)/(1 - s t) = ((1+s) + e^{-2a}(1-s)) / ((1-s) + e^{-2a}(1+s))
    // for a = |eta|, s = |sin(theta/2)|; the result is odd in both factors.
    const double s_signed = std::sin(theta / 2.0);
    const double s = std::fabs(s_signed);
    const double a = std::fabs(eta);
    const double sign = (eta < 0 ? -1.0 : 1.0) * (s_signed < 0 ? -1.0 : 1.0);
    if (s == 1.0) return sign * 2.0 * a;  // atanh and tanh collapse
    const double decay = std::exp(-2.0 * a);
    const double lam = std::log(((1.0 + s) + decay * (1.0 - s)) /
                                ((1.0 - s) + decay * (1.0 + s)));
    return sign * lam;
}

LorentzMat boost_b2(double eta, double theta) {
    const double lam = lambda_param(eta, theta);
    const double sh2 = std::sin(theta / 2.0);
    const double ch2 = std::cos(theta / 2.0);
    const double st = std::sin(theta);
    const double chl = std::cosh(lam);
    const double shl = std::sinh(lam);
    const double shl2sq = std::sinh(lam / 2.0) * std::sinh(lam / 2.0);
    LorentzMat b;
    b(0, 0) = chl;
    b(0, 1) = -sh2 * shl;
    b(0, 2) = ch2 * shl;
    b(1, 0) = -sh2 * shl;
    b(1, 1) = 1.0 + sh2 * sh2 * (chl - 1.0);
    b(1, 2) = -st * shl2sq;
    b(2, 0) = ch2 * shl;
    b(2, 1) = -st * shl2sq;
    b(2, 2) = 1.0 + ch2 * ch2 * (chl - 1.0);
    return b;
}

LorentzMat boost_b3(double eta, double theta) {
    return rotation_y(theta) * boost_z(-eta) * rotation_y(-theta);
}

LorentzMat closure_product(double eta, double theta) {
    return boost_b3(eta, theta) * (boost_b2(eta, theta) * boost_z(eta));
}

double wigner_angle(double eta, double theta) {
    require_finite(eta, "eta");
    require_finite(theta, "theta");
    // asin argument sin(theta) sinh^2(eta/2) / sqrt(cosh^2 eta - sinh^2 eta sin^2(theta/2)),
    // rescaled by sinh^2(eta/2) so intermediates stay representable for any
    // finite eta (the denominator identity cosh^2 - sinh^2 sin^2 = 1 + sinh^2 cos^2
    // turns it into a hypot). Overflowing sinh^2 degrades gracefully to the
    // large-eta limit sin(theta/2).
    const double sh_half = std::sinh(eta / 2.0);
    const double th_half = std::tanh(eta / 2.0);
    const double scale =
        std::hypot(1.0 / (sh_half * sh_half), 2.0 * std::cos(theta / 2.0) / th_half);
    double arg = std::sin(theta) / scale;
    if (!std::isfinite(arg)) arg = 0.0;  // eta == 0: scale is infinite, Omega = 0
    arg = std::min(1.0, std::max(-1.0, arg));
    return 2.0 * std::asin(arg);
}

LorentzMat little_group_conjugate(double eta, double big_theta) {
    const LorentzMat b1 = boost_z(eta);
    return b1 * rotation_y(big_theta) * b1.inverse();
}

LorentzMat stabilizer_product(double eta, double theta) {
    return boost_b2(eta, theta).inverse() * rotation_y(theta);
}

double extract_rotation_angle(const LorentzMat& m, double tol) {
    double angle = std::atan2(m(2, 1), m(1, 1));
    if (angle == -kPi) angle = kPi;  // keep the (-pi, pi] contract
    const double residual = max_abs_diff(m, rotation_y(angle));
    if (!(residual <= tol)) throw not_a_rotation(residual);
    return angle;
}

FourVector apply(const LorentzMat& m, const FourVector& v) { return m * v; }

BoostTriangle BoostTriangle::from(double eta, double theta) {
    BoostTriangle t;
    t.eta = eta;
    t.theta = theta;
    t.lambda = lambda_param(eta, theta);
    t.omega = wigner_angle(eta, theta);
    t.big_theta = t.omega - theta;
    return t;
}

}  // namespace wigcav
