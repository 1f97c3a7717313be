#pragma once

#include "cohtrade/linalg.hpp"
#include "cohtrade/types.hpp"

#include <optional>

namespace cohtrade {

/// Normalized state vector (Euclidean norm 1 within kUnitNormTol).
class PureState {
 public:
  explicit PureState(Vector amplitudes);

  int dim() const { return static_cast<int>(amps_.size()); }
  const Vector& amplitudes() const { return amps_; }

 private:
  Vector amps_;
};

/// Validated quantum state: Hermitian (within kHermitianTol, then
/// symmetrized), unit trace, eigenvalues >= kEigenvalueFloor. The spectrum
/// found during validation is kept for entropy work. Immutable after
/// construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix& mat,
                         std::optional<SubsystemDims> subsystems = {});

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Matrix& mat() const { return mat_; }
  /// Eigenvalues ascending, as validated (may include values in
  /// [kEigenvalueFloor, 0)).
  const RealVector& eigenvalues() const { return eigenvalues_; }
  const std::optional<SubsystemDims>& subsystems() const {
    return subsystems_;
  }
  /// Same state annotated with a bipartite split.
  DensityMatrix with_subsystems(SubsystemDims dims) const;

 private:
  Matrix mat_;
  RealVector eigenvalues_;
  std::optional<SubsystemDims> subsystems_;
};

enum class Bell { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// One of the four maximally entangled two-qubit vectors.
PureState bell_state(Bell kind);

/// cos(theta)|Phi+> + sin(theta)|Psi+>; the two components are orthonormal
/// so the result is normalized for every real theta.
PureState resource_state(double theta);

/// cos(alpha/2) e^{i beta/2} |0> + sin(alpha/2) e^{-i beta/2} |1>.
PureState bloch_pure_state(double alpha, double beta);

/// |psi><psi| as a validated DensityMatrix.
DensityMatrix densify(const PureState& psi,
                      std::optional<SubsystemDims> subsystems = {});

/// -sum lambda log2 lambda in bits, eigenvalues clamped to [0, 1] and
/// 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// -x log2 x - (1-x) log2(1-x); x is clamped within kDomainTol of [0, 1]
/// and rejected beyond it.
double binary_entropy(double x);

/// <psi| rho |psi>, real for Hermitian rho.
double overlap(const PureState& psi, const DensityMatrix& rho);

}  // namespace cohtrade
