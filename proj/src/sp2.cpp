#include "wigcav/sp2.hpp"

#include <cmath>
#include <string>

namespace wigcav {

SpMat::SpMat() : m_{1.0, 0.0, 0.0, 1.0} {}

SpMat::SpMat(double a, double b, double c, double d) : m_{a, b, c, d} {}

SpMat SpMat::identity() { return SpMat(); }

SpMat SpMat::operator*(const SpMat& rhs) const {
    const SpMat& l = *this;
    return SpMat(l(0, 0) * rhs(0, 0) + l(0, 1) * rhs(1, 0),
                 l(0, 0) * rhs(0, 1) + l(0, 1) * rhs(1, 1),
                 l(1, 0) * rhs(0, 0) + l(1, 1) * rhs(1, 0),
                 l(1, 0) * rhs(0, 1) + l(1, 1) * rhs(1, 1));
}

SpMat SpMat::operator-() const { return SpMat(-m_[0], -m_[1], -m_[2], -m_[3]); }

SpMat SpMat::transposed() const { return SpMat(m_[0], m_[2], m_[1], m_[3]); }

SpMat SpMat::inverse() const {
    const double d = det();
    return SpMat(m_[3] / d, -m_[1] / d, -m_[2] / d, m_[0] / d);
}

double SpMat::det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

double SpMat::trace() const { return m_[0] + m_[3]; }

double max_abs_diff(const SpMat& a, const SpMat& b) {
    double worst = 0.0;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) worst = std::max(worst, std::fabs(a(r, c) - b(r, c)));
    return worst;
}

SpMat matrix_power(SpMat g, unsigned long n) {
    SpMat result;
    while (n != 0) {
        if (n & 1UL) result = result * g;
        n >>= 1UL;
        if (n != 0) g = g * g;
    }
    return result;
}

SpMat squeeze_z(double eta) {
    if (!std::isfinite(eta)) throw std::invalid_argument("eta must be finite");
    return SpMat(std::exp(eta / 2.0), 0.0, 0.0, std::exp(-eta / 2.0));
}

SpMat rot2(double theta) {
    if (!std::isfinite(theta)) throw std::invalid_argument("theta must be finite");
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return SpMat(c, -s, s, c);
}

SpMat s2(double eta, double theta) {
    const double lam = lambda_param(eta, theta);
    const double ch = std::cosh(lam / 2.0);
    const double sh = std::sinh(lam / 2.0);
    const double s = std::sin(theta / 2.0);
    const double c = std::cos(theta / 2.0);
    return SpMat(ch - s * sh, c * sh, c * sh, ch + s * sh);
}

SpMat s3(double eta, double theta) {
    if (!std::isfinite(eta)) throw std::invalid_argument("eta must be finite");
    if (!std::isfinite(theta)) throw std::invalid_argument("theta must be finite");
    const double ch = std::cosh(eta / 2.0);
    const double sh = std::sinh(eta / 2.0);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return SpMat(ch - c * sh, -s * sh, -s * sh, ch + c * sh);
}

SpMat closure2(double eta, double theta) {
    return s3(eta, theta) * (s2(eta, theta) * squeeze_z(eta));
}

SpMat sandwich(double eta, double big_theta) {
    if (!std::isfinite(eta)) throw std::invalid_argument("eta must be finite");
    if (!std::isfinite(big_theta)) throw std::invalid_argument("big_theta must be finite");
    const double c = std::cos(big_theta / 2.0);
    const double s = std::sin(big_theta / 2.0);
    return SpMat(c, -std::exp(eta) * s, std::exp(-eta) * s, c);
}

LorentzMat covering_map(const SpMat& g) {
    if (std::fabs(g.det() - 1.0) > 1e-10) {
        throw std::domain_error("covering_map requires det = 1, got det = " +
                                std::to_string(g.det()));
    }
    // Image of the (ct, z, x) basis under X -> g X g^T with
    // X(ct,z,x) = [[ct+z, x], [x, ct-z]]; y is carried along untouched.
    LorentzMat out;
    const SpMat basis[3] = {SpMat(1, 0, 0, 1), SpMat(1, 0, 0, -1), SpMat(0, 1, 1, 0)};
    for (int col = 0; col < 3; ++col) {
        const SpMat y = g * basis[col] * g.transposed();
        out(0, col) = 0.5 * (y(0, 0) + y(1, 1));
        out(1, col) = 0.5 * (y(0, 0) - y(1, 1));
        out(2, col) = y(0, 1);
        out(3, col) = 0.0;
    }
    out(0, 3) = out(1, 3) = out(2, 3) = 0.0;
    out(3, 3) = 1.0;
    return out;
}

SpMat normalize_sign(const SpMat& g) { return g.trace() < 0.0 ? -g : g; }

}  // namespace wigcav
