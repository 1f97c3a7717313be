#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace cohtrade {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Max-entry tolerance for treating a matrix as Hermitian; inputs within it
// are symmetrized as (H + H^dag)/2 before spectral work.
inline constexpr double kHermitianTol = 1e-10;
// |trace - 1| allowed for a density matrix.
inline constexpr double kTraceTol = 1e-10;
// Most negative eigenvalue a density matrix may carry; anything in
// [kEigenvalueFloor, 0) is treated as 0 in entropies.
inline constexpr double kEigenvalueFloor = -1e-10;
// Pure-state norm tolerance.
inline constexpr double kUnitNormTol = 1e-12;
// Sum K^dag K = I tolerance (trace preservation) and Sum K K^dag = I
// tolerance (unitality), both max-entry.
inline constexpr double kKrausTol = 1e-10;
// Gate on the encoding-entropy spread (bits) before the noisy capacity
// closed form is trusted.
inline constexpr double kCovarianceTol = 1e-8;
// Margins below this (bits) count as genuine inequality violations.
inline constexpr double kViolationThreshold = -1e-9;
// Half-width of the clamp band accepted around closed domains like [0, 1].
inline constexpr double kDomainTol = 1e-12;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};
struct NotHermitian : Error {
  using Error::Error;
};
struct NoConvergence : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct NotUnital : Error {
  using Error::Error;
};
struct CovarianceViolation : Error {
  using Error::Error;
};
struct ValidationFailure : Error {
  using Error::Error;
};

enum class Subsystem { A, B };

/// Local dimensions of a bipartite split; basis index is i_a * b + i_b.
struct SubsystemDims {
  int a = 0;
  int b = 0;

  int total() const { return a * b; }
  friend bool operator==(SubsystemDims lhs, SubsystemDims rhs) {
    return lhs.a == rhs.a && lhs.b == rhs.b;
  }
};

}  // namespace cohtrade
