#pragma once

#include <array>
#include <stdexcept>

namespace wigcav {

/// Four-momentum / event components in the (ct, z, x, y) ordering.
struct FourVector {
    double ct = 0.0;
    double z = 0.0;
    double x = 0.0;
    double y = 0.0;

    /// Minkowski norm ct^2 - z^2 - x^2 - y^2 (metric diag(1,-1,-1,-1)).
    double minkowski_norm() const;
};

/// 4x4 real matrix acting on (ct, z, x, y) columns.
///
/// Row-major dense storage. Instances produced by the constructors below
/// preserve the metric g = diag(1,-1,-1,-1) and have determinant 1;
/// metric_residual() measures how well an instance honors that.
class LorentzMat {
public:
    LorentzMat();  // identity

    static LorentzMat identity();

    double operator()(int row, int col) const { return m_[row * 4 + col]; }
    double& operator()(int row, int col) { return m_[row * 4 + col]; }

    LorentzMat operator*(const LorentzMat& rhs) const;
    FourVector operator*(const FourVector& v) const;

    LorentzMat transposed() const;

    /// Inverse via metric conjugation g M^T g. Exact for metric-preserving
    /// matrices, which is the class invariant; do not use on arbitrary input.
    LorentzMat inverse() const;

    double det() const;
    double trace() const;

    /// Largest absolute entry.
    double max_norm() const;

    /// Max-norm of M^T g M - g. Scales like eps * max_norm()^2 for a
    /// correctly rounded metric-preserving matrix, so tolerance checks on
    /// large-rapidity matrices should scale accordingly.
    double metric_residual() const;

private:
    std::array<double, 16> m_;
};

/// Max-norm of the entrywise difference.
double max_abs_diff(const LorentzMat& a, const LorentzMat& b);
double max_abs_diff(const FourVector& a, const FourVector& b);

/// Thrown by extract_rotation_angle when the input is not close to a
/// rotation in the (z, x) plane; carries the offending residual.
class not_a_rotation : public std::domain_error {
public:
    explicit not_a_rotation(double residual);
    double residual() const { return residual_; }

private:
    double residual_;
};

/// Boost along z by rapidity eta: mixes (ct, z) with cosh/sinh eta.
LorentzMat boost_z(double eta);

/// Rotation of the (z, x) plane by theta (radians); ct and y are untouched.
LorentzMat rotation_y(double theta);

/// Rapidity of the boost that carries (m cosh eta, m sinh eta, 0, 0) to its
/// theta-rotated image: lambda = 2 atanh(sin(theta/2) tanh(eta)).
/// Evaluated in log form so the result stays finite for all finite inputs,
/// including where sin(theta/2)*tanh(eta) rounds to 1.
double lambda_param(double eta, double theta);

/// The boost carrying P_b = m(cosh eta, sinh eta, 0, 0) to
/// P_c = m(cosh eta, sinh eta cos theta, sinh eta sin theta, 0).
/// Symmetric, metric-preserving; acts along the direction at angle
/// (pi + theta)/2 from the z axis with rapidity lambda_param(eta, theta).
LorentzMat boost_b2(double eta, double theta);

/// The boost returning P_c to rest: rotation_y(theta) * boost_z(-eta) *
/// rotation_y(-theta).
LorentzMat boost_b3(double eta, double theta);

/// B3 * B2 * B1. Fixes the rest momentum (m,0,0,0); equals
/// rotation_y(wigner_angle(eta, theta)) up to rounding.
LorentzMat closure_product(double eta, double theta);

/// Wigner rotation angle of the three-boost closure:
///   Omega = 2 asin( sin(theta) sinh^2(eta/2)
///                   / sqrt(cosh^2 eta - sinh^2 eta sin^2(theta/2)) ).
double wigner_angle(double eta, double theta);

/// B1 * R(big_theta) * B1^-1: leaves P_b invariant for any big_theta.
LorentzMat little_group_conjugate(double eta, double big_theta);

/// B2^-1 * R(theta): leaves P_b invariant. As an element of P_b's little
/// group it equals little_group_conjugate(eta, theta - Omega); its inverse
/// R(-theta) * B2 equals little_group_conjugate(eta, Omega - theta).
LorentzMat stabilizer_product(double eta, double theta);

/// Angle of a (z, x)-plane rotation, normalized to (-pi, pi].
/// Throws not_a_rotation when m differs from rotation_y(angle) by more
/// than tol in max-norm (unit ct/y rows and columns included).
double extract_rotation_angle(const LorentzMat& m, double tol = 1e-8);

/// Matrix-vector product in the (ct, z, x, y) ordering.
FourVector apply(const LorentzMat& m, const FourVector& v);

/// The (eta, theta) kinematics of the closed three-boost triangle together
/// with its derived parameters.
struct BoostTriangle {
    double eta;        // rapidity of the first boost
    double theta;      // rotation angle between the first two momenta
    double lambda;     // rapidity of the second boost
    double omega;      // Wigner angle of the closure
    double big_theta;  // omega - theta

    static BoostTriangle from(double eta, double theta);
};

}  // namespace wigcav
