#include "cohtrade/linalg.hpp"

#include <cmath>

namespace cohtrade {

namespace {

// Entries at or below this magnitude are treated as zero when picking the
// phase anchor of an eigenvector.
constexpr double kPhaseAnchorTol = 1e-8;

void fix_column_phases(Matrix& vectors) {
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
      const double mag = std::abs(vectors(r, c));
      if (mag > kPhaseAnchorTol) {
        vectors.col(c) *= std::conj(vectors(r, c)) / mag;
        break;
      }
    }
  }
}

}  // namespace

double hermiticity_defect(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatch("hermiticity_defect: matrix is not square");
  }
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

Spectrum eigh(const Matrix& h) {
  if (h.rows() != h.cols()) {
    throw NotHermitian("eigh: matrix is not square");
  }
  if (!h.allFinite()) {
    throw NotHermitian("eigh: matrix has non-finite entries");
  }
  if (hermiticity_defect(h) > kHermitianTol) {
    throw NotHermitian("eigh: max-entry deviation from H^dag exceeds 1e-10");
  }
  const Matrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NoConvergence("eigh: eigensolver failed to converge");
  }
  Spectrum spectrum{solver.eigenvalues(), solver.eigenvectors()};
  fix_column_phases(spectrum.eigenvectors);
  return spectrum;
}

Matrix partial_trace(const Matrix& rho, SubsystemDims dims, Subsystem keep) {
  const int total = dims.total();
  if (dims.a < 1 || dims.b < 1 || rho.rows() != total || rho.cols() != total) {
    throw DimensionMismatch("partial_trace: matrix does not match dims");
  }
  if (keep == Subsystem::B) {
    Matrix out = Matrix::Zero(dims.b, dims.b);
    for (int ia = 0; ia < dims.a; ++ia) {
      out += rho.block(ia * dims.b, ia * dims.b, dims.b, dims.b);
    }
    return out;
  }
  Matrix out = Matrix::Zero(dims.a, dims.a);
  for (int ia = 0; ia < dims.a; ++ia) {
    for (int ja = 0; ja < dims.a; ++ja) {
      out(ia, ja) = rho.block(ia * dims.b, ja * dims.b, dims.b, dims.b).trace();
    }
  }
  return out;
}

Matrix partial_transpose(const Matrix& rho, SubsystemDims dims,
                         Subsystem which) {
  const int total = dims.total();
  if (dims.a < 1 || dims.b < 1 || rho.rows() != total || rho.cols() != total) {
    throw DimensionMismatch("partial_transpose: matrix does not match dims");
  }
  Matrix out(total, total);
  for (int ia = 0; ia < dims.a; ++ia) {
    for (int ib = 0; ib < dims.b; ++ib) {
      for (int ja = 0; ja < dims.a; ++ja) {
        for (int jb = 0; jb < dims.b; ++jb) {
          const int row = ia * dims.b + ib;
          const int col = ja * dims.b + jb;
          const int src_row =
              (which == Subsystem::A) ? ja * dims.b + ib : ia * dims.b + jb;
          const int src_col =
              (which == Subsystem::A) ? ia * dims.b + jb : ja * dims.b + ib;
          out(row, col) = rho(src_row, src_col);
        }
      }
    }
  }
  return out;
}

double trace_norm_hermitian(const Matrix& a) {
  return eigh(a).eigenvalues.cwiseAbs().sum();
}

}  // namespace cohtrade
