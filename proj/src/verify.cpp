#include "cohtrade/verify.hpp"

#include "cohtrade/linalg.hpp"
#include "cohtrade/measures.hpp"
#include "cohtrade/protocols.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace cohtrade {

double Rng::gaussian() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::gaussian_complex() {
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  return {r * std::cos(2.0 * std::numbers::pi * u2),
          r * std::sin(2.0 * std::numbers::pi * u2)};
}

std::uint64_t Rng::derive(std::uint64_t root, std::uint64_t index) {
  std::uint64_t z = root + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

PureState sample_random_pure(SubsystemDims dims, std::uint64_t seed) {
  if (dims.a < 1 || dims.b < 1) {
    throw DomainError("sample_random_pure: dims must be positive");
  }
  Rng rng(seed);
  const int n = dims.total();
  Vector v(n);
  do {
    for (int i = 0; i < n; ++i) {
      v(i) = rng.gaussian_complex();
    }
  } while (v.norm() < 1e-6);
  v /= v.norm();
  return PureState(v);
}

DensityMatrix sample_random_mixed(int dim, int rank, std::uint64_t seed) {
  if (dim < 1) {
    throw DomainError("sample_random_mixed: dim must be positive");
  }
  if (rank < 1 || rank > dim) {
    throw DomainError("sample_random_mixed: rank must lie in [1, dim]");
  }
  for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
    Rng rng(attempt == 0 ? seed : Rng::derive(seed, attempt));
    Matrix g(dim, rank);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < rank; ++j) {
        g(i, j) = rng.gaussian_complex();
      }
    }
    const Matrix gram = g * g.adjoint();
    const double trace = gram.trace().real();
    if (trace < 1e-12) {
      continue;
    }
    DensityMatrix rho(gram / trace);
    // A full-rank request must not return a numerically rank-deficient draw.
    if (rank == dim && rho.eigenvalues()(0) < 1e-14) {
      continue;
    }
    return rho;
  }
  throw NoConvergence("sample_random_mixed: repeated degenerate draws");
}

double capacity_coherence_margin(const DensityMatrix& rho) {
  const SubsystemDims dims = bipartite_dims(rho);
  const CapacityBreakdown cap = dense_coding_capacity(rho);
  const DensityMatrix rho_b(partial_trace(rho.mat(), dims, Subsystem::B));
  return 2.0 * cap.log2_d -
         (cap.capacity + relative_entropy_coherence(rho_b));
}

double capacity_coherence_margin(const DensityMatrix& rho,
                                 const KrausChannel& lambda_a,
                                 const KrausChannel& lambda_b) {
  const SubsystemDims dims = bipartite_dims(rho);
  const CapacityBreakdown cap =
      dense_coding_capacity_noisy(rho, lambda_a, lambda_b);
  const DensityMatrix noisy_b =
      apply(lambda_b,
            DensityMatrix(partial_trace(rho.mat(), dims, Subsystem::B)));
  return 2.0 * cap.log2_d -
         (cap.capacity + relative_entropy_coherence(noisy_b));
}

std::optional<double> fidelity_coherence_margin(const DensityMatrix& rho) {
  const double f = average_fidelity(rho);
  if (f < 2.0 / 3.0) {
    return std::nullopt;
  }
  const SubsystemDims dims = rho.subsystems().value_or(SubsystemDims{2, 2});
  const DensityMatrix rho_a(partial_trace(rho.mat(), dims, Subsystem::A));
  return 1.0 -
         (fidelity_bound_entropy(f) + relative_entropy_coherence(rho_a));
}

double formation_coherence_margin(const DensityMatrix& rho) {
  const SubsystemDims dims = rho.subsystems().value_or(SubsystemDims{2, 2});
  const DensityMatrix rho_a(partial_trace(rho.mat(), dims, Subsystem::A));
  return 1.0 -
         (entanglement_of_formation(rho) + relative_entropy_coherence(rho_a));
}

StateMargins state_margins(const DensityMatrix& rho) {
  StateMargins margins;
  margins.dense_coding = capacity_coherence_margin(rho);
  margins.teleportation = fidelity_coherence_margin(rho);
  margins.formation = formation_coherence_margin(rho);
  return margins;
}

void MarginReport::record(double margin, const DensityMatrix& state) {
  ++samples;
  if (margin < kViolationThreshold) {
    ++violations;
  }
  if (margin < min_margin) {
    min_margin = margin;
    worst_state = state;
  }
}

DensityMatrix sample_check_state(std::uint64_t root_seed, std::int64_t index) {
  const std::uint64_t seed =
      Rng::derive(root_seed, static_cast<std::uint64_t>(index));
  const int rank = static_cast<int>(index % 5);
  if (rank == 0) {
    return densify(sample_random_pure(SubsystemDims{2, 2}, seed),
                   SubsystemDims{2, 2});
  }
  return sample_random_mixed(4, rank, seed).with_subsystems({2, 2});
}

VerifySummary run_margin_checks(std::int64_t samples, std::uint64_t seed) {
  std::vector<DensityMatrix> states;
  states.reserve(static_cast<std::size_t>(samples));
  for (std::int64_t i = 0; i < samples; ++i) {
    states.push_back(sample_check_state(seed, i));
  }
  return run_margin_checks_on(states, seed);
}

VerifySummary run_margin_checks_on(const std::vector<DensityMatrix>& states,
                                   std::uint64_t seed) {
  VerifySummary summary;
  summary.dense_coding.seed = seed;
  summary.teleportation.seed = seed;
  summary.formation.seed = seed;
  for (const DensityMatrix& rho : states) {
    const StateMargins margins = state_margins(rho);
    summary.dense_coding.record(margins.dense_coding, rho);
    if (margins.teleportation) {
      summary.teleportation.record(*margins.teleportation, rho);
    }
    summary.formation.record(margins.formation, rho);
  }
  return summary;
}

SweepRecord evaluate_point(const DensityMatrix& rho, double p) {
  const SubsystemDims dims = bipartite_dims(rho);
  if (dims.a != 2 || dims.b != 2) {
    throw DimensionMismatch("evaluate_point: expected a two-qubit state");
  }
  const KrausChannel side = depolarizing_channel(p, 2);
  const KrausChannel joint = tensor_channel(side, side);

  SweepRecord rec;
  rec.p = p;
  const CapacityBreakdown cap = dense_coding_capacity_noisy(rho, side, side);
  rec.capacity = cap.capacity;

  const DensityMatrix noisy = apply(joint, rho);
  const DensityMatrix noisy_b(
      partial_trace(noisy.mat(), dims, Subsystem::B));
  const DensityMatrix noisy_a(
      partial_trace(noisy.mat(), dims, Subsystem::A));
  rec.coherence_b = relative_entropy_coherence(noisy_b);
  rec.coherence_a = relative_entropy_coherence(noisy_a);
  rec.fidelity = average_fidelity(noisy);
  rec.margin_dense_coding =
      2.0 * cap.log2_d - (rec.capacity + rec.coherence_b);
  if (rec.fidelity >= 2.0 / 3.0) {
    rec.h_of_f = fidelity_bound_entropy(rec.fidelity);
    rec.margin_teleport = 1.0 - (*rec.h_of_f + rec.coherence_a);
  }
  return rec;
}

std::vector<SweepRecord> sweep_line(int theta_steps, double p) {
  if (theta_steps < 2) {
    throw DomainError("sweep_line: need at least 2 theta steps");
  }
  std::vector<SweepRecord> records;
  records.reserve(static_cast<std::size_t>(theta_steps));
  for (int i = 0; i < theta_steps; ++i) {
    const double theta = std::numbers::pi * i / (theta_steps - 1);
    SweepRecord rec = evaluate_point(
        densify(resource_state(theta), SubsystemDims{2, 2}), p);
    rec.theta = theta;
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<SweepRecord> sweep(int theta_steps, int p_steps) {
  if (theta_steps < 2 || p_steps < 2) {
    throw DomainError("sweep: need at least 2 steps per axis");
  }
  std::vector<SweepRecord> records;
  records.reserve(static_cast<std::size_t>(theta_steps) * p_steps);
  for (int i = 0; i < theta_steps; ++i) {
    const double theta = std::numbers::pi * i / (theta_steps - 1);
    const DensityMatrix rho =
        densify(resource_state(theta), SubsystemDims{2, 2});
    for (int j = 0; j < p_steps; ++j) {
      const double p = static_cast<double>(j) / (p_steps - 1);
      SweepRecord rec = evaluate_point(rho, p);
      rec.theta = theta;
      records.push_back(std::move(rec));
    }
  }
  return records;
}

}  // namespace cohtrade
