#include "spinbath/spin_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace spinbath {

SpinOperators spin_operators(double spin) {
  const double twice = 2.0 * spin;
  if (spin <= 0.0 || spin > 4.5 || std::abs(twice - std::round(twice)) > 1e-12) {
    throw std::invalid_argument("spin_operators: spin must be a half-integer in [1/2, 9/2]");
  }
  SpinOperators ops;
  ops.spin = spin;
  ops.dim = static_cast<int>(std::round(twice)) + 1;
  const int d = ops.dim;
  ops.ix = Matrix::Zero(d, d);
  ops.iy = Matrix::Zero(d, d);
  ops.iz = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    const double m = spin - k;
    ops.iz(k, k) = m;
    if (k + 1 < d) {
      // <m | I+ | m-1> with m-1 = spin - (k+1)
      const double amp = std::sqrt(spin * (spin + 1.0) - (m - 1.0) * m);
      ops.ix(k, k + 1) = 0.5 * amp;
      ops.ix(k + 1, k) = 0.5 * amp;
      ops.iy(k, k + 1) = cdouble(0.0, -0.5 * amp);
      ops.iy(k + 1, k) = cdouble(0.0, 0.5 * amp);
    }
  }
  return ops;
}

Matrix rotation_matrix(const SpinOperators& ops, const std::array<double, 3>& axis, double angle) {
  const double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (norm < 1e-12) throw std::invalid_argument("rotation_matrix: zero axis vector");
  if (std::abs(norm - 1.0) > 1e-9)
    throw std::invalid_argument("rotation_matrix: axis must be unit length");
  const Matrix generator = axis[0] * ops.ix + axis[1] * ops.iy + axis[2] * ops.iz;
  const EigenSystem es = eigendecompose(generator);
  const int d = ops.dim;
  Matrix phases = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    phases(k, k) = std::polar(1.0, -angle * es.eigenvalues[k]);
  }
  return es.eigenvectors * phases * es.eigenvectors.adjoint();
}

SpinOperators rotate_operator(const SpinOperators& ops, const std::array<double, 3>& axis,
                              double angle) {
  const Matrix r = rotation_matrix(ops, axis, angle);
  SpinOperators out;
  out.spin = ops.spin;
  out.dim = ops.dim;
  out.ix = r * ops.ix * r.adjoint();
  out.iy = r * ops.iy * r.adjoint();
  out.iz = r * ops.iz * r.adjoint();
  return out;
}

SpinOperators tilt_operators(const SpinOperators& ops, double theta, double phi) {
  const Matrix r =
      rotation_matrix(ops, {0.0, 0.0, 1.0}, phi) * rotation_matrix(ops, {0.0, 1.0, 0.0}, theta);
  SpinOperators out;
  out.spin = ops.spin;
  out.dim = ops.dim;
  out.ix = r * ops.ix * r.adjoint();
  out.iy = r * ops.iy * r.adjoint();
  out.iz = r * ops.iz * r.adjoint();
  return out;
}

EigenSystem eigendecompose(const Matrix& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("eigendecompose: matrix not square");
  if (h.rows() > 16) throw std::invalid_argument("eigendecompose: dim > 16");
  const double scale = h.cwiseAbs().maxCoeff();
  if (scale > 0.0) {
    const double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-9 * scale) throw std::invalid_argument("eigendecompose: matrix not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) throw std::invalid_argument("eigendecompose: failed");
  return EigenSystem{solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace spinbath
