#pragma once

#include "cohtrade/channels.hpp"
#include "cohtrade/states.hpp"

namespace cohtrade {

/// Capacity in bits split into the terms it is computed from;
/// capacity = entropy_avg_state - entropy_signal holds by construction.
struct CapacityBreakdown {
  double capacity = 0.0;
  double entropy_avg_state = 0.0;
  double entropy_signal = 0.0;
  double log2_d = 0.0;
};

/// Bipartite split of a state: the annotation when present, otherwise the
/// square split when dim is a perfect square. Throws DimensionMismatch.
SubsystemDims bipartite_dims(const DensityMatrix& rho);

/// Average of the d^2 equiprobable encodings (U_{m,n} (x) I) rho (...)^dag;
/// equals I/d (x) rho_B. The overload with channels applies
/// lambda_a (x) lambda_b to every term and equals I/d (x) lambda_b(rho_B)
/// when both channels are unital.
DensityMatrix ensemble_average_state(const DensityMatrix& rho);
DensityMatrix ensemble_average_state(const DensityMatrix& rho,
                                     const KrausChannel& lambda_a,
                                     const KrausChannel& lambda_b);

/// Optimal dense-coding capacity log2 d + S(rho_B) - S(rho_AB).
CapacityBreakdown dense_coding_capacity(const DensityMatrix& rho);

/// Capacity through per-side unital channels,
/// log2 d + S(lambda_b(rho_B)) - S(lambda_ab(rho_AB)). Throws NotUnital, and
/// CovarianceViolation when the signal entropies depend on the encoding
/// beyond kCovarianceTol.
CapacityBreakdown dense_coding_capacity_noisy(const DensityMatrix& rho,
                                              const KrausChannel& lambda_a,
                                              const KrausChannel& lambda_b);

/// max - min of the output entropies S(lambda_ab(rho_{m,n})) over all d^2
/// encodings, in bits. Zero spread is what licenses the capacity closed form.
double encoding_entropy_spread(const DensityMatrix& rho,
                               const KrausChannel& lambda_a,
                               const KrausChannel& lambda_b);

/// Brute-force Holevo quantity S(avg) - (1/d^2) sum S(signal) of the
/// equiprobable encoding ensemble; the independent cross-check for the
/// capacity closed forms.
double holevo_from_ensemble(const DensityMatrix& rho);
double holevo_from_ensemble(const DensityMatrix& rho,
                            const KrausChannel& lambda_a,
                            const KrausChannel& lambda_b);

/// Output qubit of the teleportation circuit CZ(a,B) CX(A,B) H(a) CX(a,A)
/// run on |psi(alpha, beta)>_a (x) resource_AB, traced down to wire B.
/// Wire order (a, A, B) with a the most significant index.
DensityMatrix teleport_output(const DensityMatrix& resource, double alpha,
                              double beta);

/// <psi| rho_out |psi> for one input point on the Bloch sphere.
double teleportation_fidelity_point(const DensityMatrix& resource,
                                    double alpha, double beta);

/// Bloch-sphere average (1/4pi) int F(alpha, beta) sin(alpha) dalpha dbeta,
/// by Gauss-Legendre in alpha and the trapezoid rule in beta (the integrand
/// is 2pi-periodic in beta, so uniform nodes converge spectrally).
double average_fidelity(const DensityMatrix& resource, int alpha_nodes = 32,
                        int beta_nodes = 32);

/// Analytic average fidelity of the resource family
/// cos(theta)|Phi+> + sin(theta)|Psi+> sent through the two-sided
/// depolarizing channel: (1/6) [4 + (p-2) p + 2 (1-p)^2 cos(2 theta)].
double depolarized_resource_fidelity(double theta, double p);

/// h((1 + sqrt(1 - (3f - 2)^2)) / 2) in bits, for f in [2/3, 1].
double fidelity_bound_entropy(double f);

}  // namespace cohtrade
