#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

namespace spinbath {

using Matrix = Eigen::MatrixXcd;
using cdouble = std::complex<double>;

/// Angular-momentum operator triple for spin quantum number I, in the basis
/// m = I, I-1, ..., -I (iz diagonal, descending). Matrix elements are in
/// units of hbar.
struct SpinOperators {
  double spin = 0.0;
  int dim = 0;
  Matrix ix, iy, iz;
};

struct EigenSystem {
  Eigen::VectorXd eigenvalues;  // ascending
  Matrix eigenvectors;           // column k belongs to eigenvalue k
};

/// Ladder-operator construction. I must be a half-integer in [1/2, 9/2].
SpinOperators spin_operators(double spin);

/// Conjugates all three operators by exp(-i angle n.I). axis must be unit
/// length to 1e-9.
SpinOperators rotate_operator(const SpinOperators& ops, const std::array<double, 3>& axis,
                              double angle);

/// exp(-i angle n.I) as a dense matrix.
Matrix rotation_matrix(const SpinOperators& ops, const std::array<double, 3>& axis, double angle);

/// Operators whose z axis points along polar angles (theta, phi) in the frame
/// of `ops`: conjugation by Rz(phi) Ry(theta).
SpinOperators tilt_operators(const SpinOperators& ops, double theta, double phi);

/// Dense Hermitian eigensolve, dim <= 16. Throws std::invalid_argument when H
/// is not Hermitian within 1e-9 relative asymmetry.
EigenSystem eigendecompose(const Matrix& h);

}  // namespace spinbath
