#pragma once

#include <array>

#include "wigcav/lorentz.hpp"

namespace wigcav {

/// 2x2 real unimodular matrix (det = 1): squeezes, rotations, ABCD rays.
/// Row-major [[a, b], [c, d]].
class SpMat {
public:
    SpMat();  // identity
    SpMat(double a, double b, double c, double d);

    double operator()(int row, int col) const { return m_[row * 2 + col]; }
    double& operator()(int row, int col) { return m_[row * 2 + col]; }

    static SpMat identity();

    SpMat operator*(const SpMat& rhs) const;
    SpMat operator-() const;

    SpMat transposed() const;

    /// Adjugate over determinant; exact up to rounding for det = 1 input.
    SpMat inverse() const;

    double det() const;
    double trace() const;

private:
    std::array<double, 4> m_;
};

double max_abs_diff(const SpMat& a, const SpMat& b);

/// g^n by square-and-multiply, n >= 0.
SpMat matrix_power(SpMat g, unsigned long n);

/// diag(e^{eta/2}, e^{-eta/2}): the squeeze covering boost_z(eta).
SpMat squeeze_z(double eta);

/// Rotation by theta in the double cover: half-angle entries
/// [[cos(theta/2), -sin(theta/2)], [sin(theta/2), cos(theta/2)]].
/// rot2(2*pi) is -identity, not identity.
SpMat rot2(double theta);

/// Squeeze covering boost_b2: symmetric, squeezes along the direction at
/// angle (pi + theta)/2 from the z axis with rapidity lambda_param(eta, theta).
SpMat s2(double eta, double theta);

/// Squeeze covering boost_b3: equals rot2(theta) * squeeze_z(-eta) * rot2(-theta).
SpMat s3(double eta, double theta);

/// s3 * s2 * squeeze_z: equals rot2(wigner_angle(eta, theta)) up to the
/// double-cover sign.
SpMat closure2(double eta, double theta);

/// squeeze_z(eta) * rot2(big_theta) * squeeze_z(-eta), in closed form
/// [[cos(T/2), -e^eta sin(T/2)], [e^{-eta} sin(T/2), cos(T/2)]].
/// Its N-th power is sandwich(eta, N*big_theta).
SpMat sandwich(double eta, double big_theta);

/// Two-to-one covering homomorphism onto the (2+1)-dimensional Lorentz
/// matrices, extended to 4x4 with an identity y row/column.
///
/// Defined through the symmetric-matrix representation
///   X = [[ct+z, x], [x, ct-z]],  X -> g X g^T;
/// it maps squeeze_z(eta) to boost_z(eta), rot2(theta) to rotation_y(theta),
/// and g, -g to the same image. Throws std::domain_error when
/// |det g - 1| > 1e-10.
LorentzMat covering_map(const SpMat& g);

/// Flips the overall sign so the trace is nonnegative. Comparisons across
/// the double cover are made after this normalization, since g and -g cover
/// the same Lorentz matrix.
SpMat normalize_sign(const SpMat& g);

}  // namespace wigcav
