#pragma once

#include "cohtrade/types.hpp"

namespace cohtrade {

/// Hermitian eigendecomposition with a deterministic vector convention:
/// eigenvalues ascending, each eigenvector's first component above 1e-8 in
/// magnitude rotated to be real positive.
struct Spectrum {
  RealVector eigenvalues;
  Matrix eigenvectors;  // columns, unitary
};

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
template <typename DerivedA, typename DerivedB>
Matrix kron(const Eigen::MatrixBase<DerivedA>& a,
            const Eigen::MatrixBase<DerivedB>& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          a(i, j) * b.derived();
    }
  }
  return out;
}

/// Conjugate transpose.
template <typename Derived>
Matrix dagger(const Eigen::MatrixBase<Derived>& a) {
  return a.adjoint();
}

/// Max-entry deviation of a from its conjugate transpose.
double hermiticity_defect(const Matrix& a);

/// Decomposes a Hermitian matrix (within kHermitianTol; symmetrized before
/// the solve). Throws NotHermitian or NoConvergence.
Spectrum eigh(const Matrix& h);

/// Traces out one subsystem of an operator on a bipartite space with basis
/// index i_a * dims.b + i_b; `keep` names the surviving subsystem.
Matrix partial_trace(const Matrix& rho, SubsystemDims dims, Subsystem keep);

/// Transposes the indices of one subsystem only.
Matrix partial_transpose(const Matrix& rho, SubsystemDims dims,
                         Subsystem which);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm_hermitian(const Matrix& a);

}  // namespace cohtrade
