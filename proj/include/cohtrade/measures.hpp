#pragma once

#include "cohtrade/states.hpp"

namespace cohtrade {

/// Relative entropy of coherence S(rho_diag) - S(rho) in bits, with the
/// computational basis of the state's own indexing as the incoherent basis.
double relative_entropy_coherence(const DensityMatrix& rho);

/// Wootters concurrence of a two-qubit state: max(0, l1 - l2 - l3 - l4)
/// with l_i the decreasing square roots of the eigenvalues of
/// rho (sy x sy) rho^* (sy x sy).
double concurrence(const DensityMatrix& rho);

/// max(0, ||rho^{T_A}||_1 - 1) for a two-qubit state.
double negativity(const DensityMatrix& rho);

/// Two-qubit entanglement of formation h((1 + sqrt(1 - C^2)) / 2) in bits.
double entanglement_of_formation(const DensityMatrix& rho);

}  // namespace cohtrade
