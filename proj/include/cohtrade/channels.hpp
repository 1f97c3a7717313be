#pragma once

#include "cohtrade/states.hpp"
#include "cohtrade/types.hpp"

#include <string>
#include <vector>

namespace cohtrade {

/// Completely positive trace-preserving map held as a finite Kraus list;
/// probability weights are folded into the operators. Construction checks
/// Sum K^dag K = I within kKrausTol.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<Matrix> kraus_ops, std::string label = {});

  int dim() const { return dim_; }
  const std::vector<Matrix>& kraus_ops() const { return ops_; }
  const std::string& label() const { return label_; }

 private:
  int dim_ = 0;
  std::vector<Matrix> ops_;
  std::string label_;
};

/// Shift-and-phase encoding unitary: U|j> = exp(i 2 pi m j / d) |j+n mod d>.
/// The d^2 of them are mutually orthogonal under the Hilbert-Schmidt inner
/// product.
Matrix encoding_unitary(int m, int n, int d);

/// Heisenberg-Weyl operator V = sum_k exp(2 i pi k nu / d) |k><k+mu mod d|.
Matrix heisenberg_weyl(int mu, int nu, int d);

/// Depolarizing channel with Kraus operators sqrt(q) V_{mu nu}, where
/// q = 1 - (d^2-1) p / d^2 for mu = nu = 0 and p / d^2 otherwise. Unital for
/// every p in [0, 1].
KrausChannel depolarizing_channel(double p, int d);

/// Channel with Kraus list {K_i (x) L_j}; acting on a bipartite state equals
/// applying the factors to their own sides independently.
KrausChannel tensor_channel(const KrausChannel& lambda_a,
                            const KrausChannel& lambda_b);

/// Raw action sum_i K_i m K_i^dag on an arbitrary matrix of matching size.
Matrix apply_matrix(const KrausChannel& channel, const Matrix& m);

/// Channel action on a state, revalidated as a DensityMatrix (subsystem
/// annotation carried through).
DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho);

/// True iff sum_i K_i K_i^dag = I within kKrausTol.
bool is_unital(const KrausChannel& channel);

}  // namespace cohtrade
