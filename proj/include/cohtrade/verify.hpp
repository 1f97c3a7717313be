#pragma once

#include "cohtrade/channels.hpp"
#include "cohtrade/states.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

namespace cohtrade {

/// Deterministic 64-bit generator: mt19937_64 seeded explicitly, uniforms
/// from the top 53 bits, Gaussians by Box-Muller. No global state; every
/// sampling API takes a seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Standard normal.
  double gaussian();

  /// Independent standard normals as real and imaginary parts.
  Complex gaussian_complex();

  /// Per-sample seed split from a root seed (splitmix64 mix), so serial and
  /// index-parallel runs draw identical streams.
  static std::uint64_t derive(std::uint64_t root, std::uint64_t index);

 private:
  std::mt19937_64 gen_;
};

/// Haar-distributed pure state on dims.a x dims.b via a normalized vector of
/// independent standard complex Gaussians.
PureState sample_random_pure(SubsystemDims dims, std::uint64_t seed);

/// Ginibre-induced mixed state G G^dag / tr(G G^dag) with G of shape
/// dim x rank. Degenerate draws (trace ~ 0, or rank-deficient at
/// rank == dim) are re-drawn deterministically.
DensityMatrix sample_random_mixed(int dim, int rank, std::uint64_t seed);

/// 2 log2 d - [capacity + C_re(rho_B)]; nonnegative when the dense-coding
/// complementarity bound holds. The channel overload uses the noisy
/// capacity and the coherence of lambda_b(rho_B).
double capacity_coherence_margin(const DensityMatrix& rho);
double capacity_coherence_margin(const DensityMatrix& rho,
                                 const KrausChannel& lambda_a,
                                 const KrausChannel& lambda_b);

/// 1 - [h-bound(F) + C_re(rho_A)] with F the circuit average fidelity;
/// empty when F < 2/3 (resource not useful for teleportation).
std::optional<double> fidelity_coherence_margin(const DensityMatrix& rho);

/// 1 - [E_F(rho) + C_re(rho_A)].
double formation_coherence_margin(const DensityMatrix& rho);

/// All complementarity margins of one state.
struct StateMargins {
  double dense_coding = 0.0;
  std::optional<double> teleportation;
  double formation = 0.0;
};
StateMargins state_margins(const DensityMatrix& rho);

/// Aggregate of one margin check over a sample stream. `samples` counts the
/// states the check applied to; margins below kViolationThreshold count as
/// violations and the minimum-margin state is kept for reproduction.
struct MarginReport {
  std::int64_t samples = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  std::int64_t violations = 0;
  std::optional<DensityMatrix> worst_state;
  std::uint64_t seed = 0;

  void record(double margin, const DensityMatrix& state);
};

struct VerifySummary {
  MarginReport dense_coding;
  MarginReport teleportation;
  MarginReport formation;

  std::int64_t total_violations() const {
    return dense_coding.violations + teleportation.violations +
           formation.violations;
  }
};

/// The two-qubit state stream used by the margin checks: sample index i is
/// Haar pure when i % 5 == 0, otherwise Ginibre mixed of rank i % 5.
DensityMatrix sample_check_state(std::uint64_t root_seed, std::int64_t index);

/// Runs all three margin checks over `samples` states drawn from the seeded
/// stream.
VerifySummary run_margin_checks(std::int64_t samples, std::uint64_t seed);

/// Runs the checks on explicit states instead of the random stream (the
/// seed only annotates the reports).
VerifySummary run_margin_checks_on(const std::vector<DensityMatrix>& states,
                                   std::uint64_t seed);

/// One grid point of the depolarized-resource study.
struct SweepRecord {
  std::optional<double> theta;  // absent for explicit matrix inputs
  double p = 0.0;
  double capacity = 0.0;
  double coherence_b = 0.0;
  double fidelity = 0.0;
  std::optional<double> h_of_f;  // absent when fidelity < 2/3
  double coherence_a = 0.0;
  double margin_dense_coding = 0.0;
  std::optional<double> margin_teleport;
};

/// Evaluates one resource state through the two-sided depolarizing channel
/// at noise p: noisy capacity, local coherences, circuit average fidelity,
/// and both complementarity margins.
SweepRecord evaluate_point(const DensityMatrix& rho, double p);

/// Records on the uniform theta in [0, pi] grid at fixed p.
std::vector<SweepRecord> sweep_line(int theta_steps, double p);

/// Records over the uniform (theta, p) grid on [0, pi] x [0, 1],
/// theta-major order.
std::vector<SweepRecord> sweep(int theta_steps, int p_steps);

}  // namespace cohtrade
