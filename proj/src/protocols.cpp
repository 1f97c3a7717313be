#include "cohtrade/protocols.hpp"

#include "cohtrade/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace cohtrade {

namespace {

double entropy_bits(const Matrix& rho_like) {
  const RealVector vals = eigh(rho_like).eigenvalues;
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    const double lambda = std::clamp(vals(i), 0.0, 1.0);
    if (lambda > 0.0) {
      entropy -= lambda * std::log2(lambda);
    }
  }
  return entropy;
}

SubsystemDims equal_bipartite_dims(const DensityMatrix& rho) {
  const SubsystemDims dims = bipartite_dims(rho);
  if (dims.a != dims.b) {
    throw DimensionMismatch("expected equal local dimensions");
  }
  return dims;
}

Matrix encoded(const DensityMatrix& rho, int m, int n, int d) {
  const Matrix u = kron(encoding_unitary(m, n, d), Matrix::Identity(d, d));
  return u * rho.mat() * u.adjoint();
}

void require_unital_pair(const KrausChannel& lambda_a,
                         const KrausChannel& lambda_b) {
  if (!is_unital(lambda_a) || !is_unital(lambda_b)) {
    throw NotUnital("noisy dense coding requires unital channels");
  }
}

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on the
// Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double z_prev = 0.0;
    double deriv = 0.0;
    do {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      deriv = n * (z * p1 - p2) / (z * z - 1.0);
      z_prev = z;
      z = z_prev - p1 / deriv;
    } while (std::abs(z - z_prev) > 1e-15);
    nodes[i] = -z;
    nodes[n - 1 - i] = z;
    weights[i] = 2.0 / ((1.0 - z * z) * deriv * deriv);
    weights[n - 1 - i] = weights[i];
  }
}

Matrix controlled_gate_3wire(int control, int target, const Matrix& gate) {
  // Wires (a, A, B) = (0, 1, 2); index bit of wire w is 1 << (2 - w).
  Matrix u = Matrix::Zero(8, 8);
  const int control_bit = 1 << (2 - control);
  const int target_bit = 1 << (2 - target);
  for (int col = 0; col < 8; ++col) {
    if ((col & control_bit) == 0) {
      u(col, col) = 1.0;
      continue;
    }
    const int t = (col & target_bit) ? 1 : 0;
    for (int s = 0; s < 2; ++s) {
      const int row = (col & ~target_bit) | (s ? target_bit : 0);
      u(row, col) = gate(s, t);
    }
  }
  return u;
}

const Matrix& teleport_unitary() {
  static const Matrix u_t = [] {
    Matrix x(2, 2);
    x << 0, 1, 1, 0;
    Matrix z(2, 2);
    z << 1, 0, 0, -1;
    Matrix h(2, 2);
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    const Matrix cx_a_to_cap_a = controlled_gate_3wire(0, 1, x);
    const Matrix h_a = kron(kron(h, Matrix::Identity(2, 2)),
                            Matrix::Identity(2, 2));
    const Matrix cx_cap_a_to_b = controlled_gate_3wire(1, 2, x);
    const Matrix cz_a_to_b = controlled_gate_3wire(0, 2, z);
    return Matrix(cz_a_to_b * cx_cap_a_to_b * h_a * cx_a_to_cap_a);
  }();
  return u_t;
}

// tr_{a,A}[U_t (input_op (x) resource) U_t^dag] for an arbitrary 2x2
// operator on the input wire; linear in input_op.
Matrix teleport_wire_b(const Matrix& resource, const Matrix& input_op) {
  const Matrix& u_t = teleport_unitary();
  const Matrix evolved = u_t * kron(input_op, resource) * u_t.adjoint();
  return partial_trace(evolved, SubsystemDims{4, 2}, Subsystem::B);
}

void require_two_qubit_resource(const DensityMatrix& resource) {
  if (resource.dim() != 4) {
    throw DimensionMismatch("teleportation expects a two-qubit resource");
  }
}

}  // namespace

SubsystemDims bipartite_dims(const DensityMatrix& rho) {
  if (rho.subsystems()) {
    return *rho.subsystems();
  }
  const int root = static_cast<int>(std::lround(std::sqrt(rho.dim())));
  if (root * root != rho.dim()) {
    throw DimensionMismatch(
        "state has no subsystem annotation and dim is not a perfect square");
  }
  return SubsystemDims{root, root};
}

DensityMatrix ensemble_average_state(const DensityMatrix& rho) {
  const int d = equal_bipartite_dims(rho).a;
  Matrix avg = Matrix::Zero(rho.dim(), rho.dim());
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      avg += encoded(rho, m, n, d);
    }
  }
  avg /= static_cast<double>(d) * d;
  return DensityMatrix(avg, SubsystemDims{d, d});
}

DensityMatrix ensemble_average_state(const DensityMatrix& rho,
                                     const KrausChannel& lambda_a,
                                     const KrausChannel& lambda_b) {
  const int d = equal_bipartite_dims(rho).a;
  const KrausChannel joint = tensor_channel(lambda_a, lambda_b);
  Matrix avg = Matrix::Zero(rho.dim(), rho.dim());
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      avg += apply_matrix(joint, encoded(rho, m, n, d));
    }
  }
  avg /= static_cast<double>(d) * d;
  return DensityMatrix(avg, SubsystemDims{d, d});
}

CapacityBreakdown dense_coding_capacity(const DensityMatrix& rho) {
  const SubsystemDims dims = equal_bipartite_dims(rho);
  const Matrix rho_b = partial_trace(rho.mat(), dims, Subsystem::B);
  CapacityBreakdown result;
  result.log2_d = std::log2(static_cast<double>(dims.a));
  result.entropy_avg_state = result.log2_d + entropy_bits(rho_b);
  result.entropy_signal = von_neumann_entropy(rho);
  result.capacity = result.entropy_avg_state - result.entropy_signal;
  return result;
}

CapacityBreakdown dense_coding_capacity_noisy(const DensityMatrix& rho,
                                              const KrausChannel& lambda_a,
                                              const KrausChannel& lambda_b) {
  const SubsystemDims dims = equal_bipartite_dims(rho);
  require_unital_pair(lambda_a, lambda_b);
  const double spread = encoding_entropy_spread(rho, lambda_a, lambda_b);
  if (spread > kCovarianceTol) {
    throw CovarianceViolation(
        "signal entropy depends on the encoding; closed form does not apply");
  }
  const Matrix rho_b = partial_trace(rho.mat(), dims, Subsystem::B);
  const KrausChannel joint = tensor_channel(lambda_a, lambda_b);
  CapacityBreakdown result;
  result.log2_d = std::log2(static_cast<double>(dims.a));
  result.entropy_avg_state =
      result.log2_d + entropy_bits(apply_matrix(lambda_b, rho_b));
  result.entropy_signal = entropy_bits(apply_matrix(joint, rho.mat()));
  result.capacity = result.entropy_avg_state - result.entropy_signal;
  return result;
}

double encoding_entropy_spread(const DensityMatrix& rho,
                               const KrausChannel& lambda_a,
                               const KrausChannel& lambda_b) {
  const int d = equal_bipartite_dims(rho).a;
  const KrausChannel joint = tensor_channel(lambda_a, lambda_b);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      const double s = entropy_bits(apply_matrix(joint, encoded(rho, m, n, d)));
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
  }
  return hi - lo;
}

double holevo_from_ensemble(const DensityMatrix& rho) {
  const int d = equal_bipartite_dims(rho).a;
  double signal_entropy = 0.0;
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      signal_entropy += entropy_bits(encoded(rho, m, n, d));
    }
  }
  signal_entropy /= static_cast<double>(d) * d;
  return von_neumann_entropy(ensemble_average_state(rho)) - signal_entropy;
}

double holevo_from_ensemble(const DensityMatrix& rho,
                            const KrausChannel& lambda_a,
                            const KrausChannel& lambda_b) {
  const int d = equal_bipartite_dims(rho).a;
  const KrausChannel joint = tensor_channel(lambda_a, lambda_b);
  double signal_entropy = 0.0;
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      signal_entropy +=
          entropy_bits(apply_matrix(joint, encoded(rho, m, n, d)));
    }
  }
  signal_entropy /= static_cast<double>(d) * d;
  return von_neumann_entropy(
             ensemble_average_state(rho, lambda_a, lambda_b)) -
         signal_entropy;
}

DensityMatrix teleport_output(const DensityMatrix& resource, double alpha,
                              double beta) {
  require_two_qubit_resource(resource);
  const Vector psi = bloch_pure_state(alpha, beta).amplitudes();
  const Matrix out = teleport_wire_b(resource.mat(), psi * psi.adjoint());
  return DensityMatrix(out);
}

double teleportation_fidelity_point(const DensityMatrix& resource,
                                    double alpha, double beta) {
  return overlap(bloch_pure_state(alpha, beta),
                 teleport_output(resource, alpha, beta));
}

double average_fidelity(const DensityMatrix& resource, int alpha_nodes,
                        int beta_nodes) {
  require_two_qubit_resource(resource);
  if (alpha_nodes < 2 || beta_nodes < 2) {
    throw DomainError("average_fidelity: need at least 2 nodes per axis");
  }

  // The circuit is linear in the input operator, so run it once per matrix
  // unit |i><j| of the input wire and recombine at the quadrature nodes.
  std::array<Matrix, 4> images;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Matrix unit = Matrix::Zero(2, 2);
      unit(i, j) = 1.0;
      images[2 * i + j] = teleport_wire_b(resource.mat(), unit);
    }
  }

  std::vector<double> nodes;
  std::vector<double> weights;
  gauss_legendre(alpha_nodes, nodes, weights);

  double total = 0.0;
  for (int ib = 0; ib < beta_nodes; ++ib) {
    const double beta = 2.0 * std::numbers::pi * ib / beta_nodes;
    for (int ia = 0; ia < alpha_nodes; ++ia) {
      const double alpha = 0.5 * std::numbers::pi * (nodes[ia] + 1.0);
      const Vector psi = bloch_pure_state(alpha, beta).amplitudes();
      double f = 0.0;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          const Complex coeff = psi(i) * std::conj(psi(j));
          f += (coeff * (psi.adjoint() * images[2 * i + j] * psi)(0)).real();
        }
      }
      total += weights[ia] * std::sin(alpha) * f;
    }
  }
  // alpha interval scaling pi/2, beta node weight 2pi/n, sphere measure 4pi.
  return total * (0.5 * std::numbers::pi) * (2.0 * std::numbers::pi /
                                             beta_nodes) /
         (4.0 * std::numbers::pi);
}

double depolarized_resource_fidelity(double theta, double p) {
  if (p < 0.0 || p > 1.0) {
    throw DomainError("depolarized_resource_fidelity: p outside [0, 1]");
  }
  const double q = 1.0 - p;
  return (4.0 + (p - 2.0) * p + 2.0 * q * q * std::cos(2.0 * theta)) / 6.0;
}

double fidelity_bound_entropy(double f) {
  if (f < 2.0 / 3.0 - kDomainTol || f > 1.0 + kDomainTol) {
    throw DomainError("fidelity_bound_entropy: f outside [2/3, 1]");
  }
  f = std::clamp(f, 2.0 / 3.0, 1.0);
  const double y = 3.0 * f - 2.0;
  const double root = std::sqrt(std::max(0.0, 1.0 - y * y));
  return binary_entropy(0.5 * (1.0 + root));
}

}  // namespace cohtrade
