#include "cohtrade/measures.hpp"

#include "cohtrade/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cohtrade {

namespace {

const Matrix& spin_flip_conjugator() {
  // sigma_y (x) sigma_y, real in this basis.
  static const Matrix yy = [] {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 3) = -1.0;
    m(1, 2) = 1.0;
    m(2, 1) = 1.0;
    m(3, 0) = -1.0;
    return m;
  }();
  return yy;
}

void require_two_qubits(const DensityMatrix& rho, const char* who) {
  if (rho.dim() != 4) {
    throw DimensionMismatch(std::string(who) + ": expected a 4x4 state");
  }
}

}  // namespace

double relative_entropy_coherence(const DensityMatrix& rho) {
  double diag_entropy = 0.0;
  for (int i = 0; i < rho.dim(); ++i) {
    const double p = std::clamp(rho.mat()(i, i).real(), 0.0, 1.0);
    if (p > 0.0) {
      diag_entropy -= p * std::log2(p);
    }
  }
  return std::max(0.0, diag_entropy - von_neumann_entropy(rho));
}

double concurrence(const DensityMatrix& rho) {
  require_two_qubits(rho, "concurrence");
  const Matrix& yy = spin_flip_conjugator();

  // In the eigenbasis of rho = sum_i p_i |v_i><v_i|, the matrix
  // tau_ij = sqrt(p_i p_j) <v_i| yy |v_j^*> satisfies
  // tau tau^dag = sqrt(rho) rho~ sqrt(rho), so the Wootters roots are the
  // singular values of tau. Forming tau instead of rho rho~ avoids the
  // sqrt-of-noise floor on rank-deficient states.
  const Spectrum s = eigh(rho.mat());
  const RealVector roots = s.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  const Matrix overlap =
      s.eigenvectors.adjoint() * yy * s.eigenvectors.conjugate();
  const Matrix tau =
      roots.asDiagonal() * overlap * roots.asDiagonal();

  Eigen::JacobiSVD<Matrix> svd(tau);
  const RealVector lambdas = svd.singularValues();  // descending
  const double c = lambdas(0) - lambdas(1) - lambdas(2) - lambdas(3);
  return std::max(0.0, c);
}

double negativity(const DensityMatrix& rho) {
  require_two_qubits(rho, "negativity");
  const SubsystemDims dims = rho.subsystems().value_or(SubsystemDims{2, 2});
  const Matrix pt = partial_transpose(rho.mat(), dims, Subsystem::A);
  return std::max(0.0, trace_norm_hermitian(pt) - 1.0);
}

double entanglement_of_formation(const DensityMatrix& rho) {
  const double c = concurrence(rho);
  const double root = std::sqrt(std::max(0.0, 1.0 - c * c));
  return binary_entropy(0.5 * (1.0 + root));
}

}  // namespace cohtrade
