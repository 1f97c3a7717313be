#include "cohtrade/states.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace cohtrade {

PureState::PureState(Vector amplitudes) : amps_(std::move(amplitudes)) {
  if (!amps_.allFinite()) {
    throw ValidationFailure("PureState: non-finite amplitudes");
  }
  if (std::abs(amps_.norm() - 1.0) > kUnitNormTol) {
    throw ValidationFailure("PureState: norm deviates from 1 beyond 1e-12");
  }
}

DensityMatrix::DensityMatrix(const Matrix& mat,
                             std::optional<SubsystemDims> subsystems)
    : subsystems_(subsystems) {
  if (mat.rows() != mat.cols() || mat.rows() < 1) {
    throw ValidationFailure("DensityMatrix: matrix is not square");
  }
  if (!mat.allFinite()) {
    throw ValidationFailure("DensityMatrix: non-finite entries");
  }
  if (hermiticity_defect(mat) > kHermitianTol) {
    throw ValidationFailure("DensityMatrix: not Hermitian within 1e-10");
  }
  mat_ = 0.5 * (mat + mat.adjoint());
  if (std::abs(mat_.trace().real() - 1.0) > kTraceTol ||
      std::abs(mat_.trace().imag()) > kTraceTol) {
    throw ValidationFailure("DensityMatrix: trace deviates from 1");
  }
  eigenvalues_ = eigh(mat_).eigenvalues;
  if (eigenvalues_(0) < kEigenvalueFloor) {
    throw ValidationFailure(
        "DensityMatrix: negative eigenvalue below -1e-10");
  }
  if (subsystems_ && (subsystems_->a < 1 || subsystems_->b < 1 ||
                      subsystems_->total() != dim())) {
    throw DimensionMismatch("DensityMatrix: subsystem dims do not factor dim");
  }
}

DensityMatrix DensityMatrix::with_subsystems(SubsystemDims dims) const {
  DensityMatrix copy = *this;
  if (dims.total() != copy.dim()) {
    throw DimensionMismatch("with_subsystems: dims do not factor dim");
  }
  copy.subsystems_ = dims;
  return copy;
}

PureState bell_state(Bell kind) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Vector v = Vector::Zero(4);
  switch (kind) {
    case Bell::PhiPlus:
      v(0) = inv_sqrt2;
      v(3) = inv_sqrt2;
      break;
    case Bell::PhiMinus:
      v(0) = inv_sqrt2;
      v(3) = -inv_sqrt2;
      break;
    case Bell::PsiPlus:
      v(1) = inv_sqrt2;
      v(2) = inv_sqrt2;
      break;
    case Bell::PsiMinus:
      v(1) = inv_sqrt2;
      v(2) = -inv_sqrt2;
      break;
  }
  return PureState(v);
}

PureState resource_state(double theta) {
  const double c = std::cos(theta) / std::sqrt(2.0);
  const double s = std::sin(theta) / std::sqrt(2.0);
  Vector v(4);
  v << c, s, s, c;
  return PureState(v);
}

PureState bloch_pure_state(double alpha, double beta) {
  Vector v(2);
  v << std::polar(std::cos(alpha / 2.0), beta / 2.0),
      std::polar(std::sin(alpha / 2.0), -beta / 2.0);
  return PureState(v);
}

DensityMatrix densify(const PureState& psi,
                      std::optional<SubsystemDims> subsystems) {
  const Vector& a = psi.amplitudes();
  return DensityMatrix(a * a.adjoint(), subsystems);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < rho.eigenvalues().size(); ++i) {
    const double lambda = std::clamp(rho.eigenvalues()(i), 0.0, 1.0);
    if (lambda > 0.0) {
      entropy -= lambda * std::log2(lambda);
    }
  }
  return entropy;
}

double binary_entropy(double x) {
  if (x < -kDomainTol || x > 1.0 + kDomainTol) {
    throw DomainError("binary_entropy: argument outside [0, 1]");
  }
  x = std::clamp(x, 0.0, 1.0);
  double entropy = 0.0;
  if (x > 0.0) {
    entropy -= x * std::log2(x);
  }
  if (x < 1.0) {
    entropy -= (1.0 - x) * std::log2(1.0 - x);
  }
  return entropy;
}

double overlap(const PureState& psi, const DensityMatrix& rho) {
  if (psi.dim() != rho.dim()) {
    throw DimensionMismatch("overlap: state and matrix dims differ");
  }
  const Vector& a = psi.amplitudes();
  return (a.adjoint() * rho.mat() * a)(0).real();
}

}  // namespace cohtrade
