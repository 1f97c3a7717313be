#include "cohtrade/verify.hpp"

#include "cohtrade/linalg.hpp"
#include "cohtrade/measures.hpp"
#include "cohtrade/protocols.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace cohtrade;

TEST_CASE("Rng streams are reproducible and seed-sensitive") {
  Rng first(123);
  Rng second(123);
  for (int i = 0; i < 100; ++i) {
    CHECK(first.uniform() == second.uniform());
  }
  Rng other(124);
  Rng base(123);
  bool any_different = false;
  for (int i = 0; i < 10; ++i) {
    any_different |= (base.uniform() != other.uniform());
  }
  CHECK(any_different);
  CHECK(Rng::derive(1, 2) != Rng::derive(1, 3));
  CHECK(Rng::derive(1, 2) == Rng::derive(1, 2));
}

TEST_CASE("Rng gaussians have sane first moments") {
  Rng rng(7);
  double sum = 0.0;
  double sum_sq = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double x = rng.gaussian();
    sum += x;
    sum_sq += x * x;
  }
  CHECK(std::abs(sum / n) < 0.03);
  CHECK(std::abs(sum_sq / n - 1.0) < 0.05);
}

TEST_CASE("sample_random_pure is deterministic per seed and normalized") {
  const PureState a = sample_random_pure({2, 2}, 42);
  const PureState b = sample_random_pure({2, 2}, 42);
  CHECK((a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff() == 0.0);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CHECK(std::abs(sample_random_pure({2, 3}, seed).amplitudes().norm() -
                   1.0) <= 1e-12);
  }
}

TEST_CASE("mean reduced purity of Haar pure states matches 4/5") {
  double total = 0.0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const DensityMatrix rho = densify(
        sample_random_pure({2, 2}, Rng::derive(0xABCD, i)), {{2, 2}});
    const Matrix rho_a = partial_trace(rho.mat(), {2, 2}, Subsystem::A);
    total += (rho_a * rho_a).trace().real();
  }
  CHECK(std::abs(total / n - 0.8) < 0.01);
}

TEST_CASE("sample_random_mixed honors rank and validity") {
  const DensityMatrix pure = sample_random_mixed(4, 1, 9);
  CHECK(std::abs((pure.mat() * pure.mat()).trace().real() - 1.0) <= 1e-10);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int rank = 1 + static_cast<int>(seed % 4);
    const DensityMatrix rho = sample_random_mixed(4, rank, 100 + seed);
    CHECK(std::abs(rho.mat().trace().real() - 1.0) <= 1e-12);
    CHECK(rho.eigenvalues()(0) >= -1e-12);
  }

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CHECK(sample_random_mixed(4, 4, 200 + seed).eigenvalues()(0) > 0.0);
  }

  CHECK_THROWS_AS(sample_random_mixed(4, 0, 1), DomainError);
  CHECK_THROWS_AS(sample_random_mixed(4, 5, 1), DomainError);
}

TEST_CASE("dense-coding margin is zero at both equality points") {
  const DensityMatrix bell =
      densify(bell_state(Bell::PhiPlus), SubsystemDims{2, 2});
  CHECK(std::abs(capacity_coherence_margin(bell)) <= 1e-9);

  const DensityMatrix plus_plus =
      densify(resource_state(std::numbers::pi / 4), {{2, 2}});
  CHECK(std::abs(capacity_coherence_margin(plus_plus)) <= 1e-9);
}

TEST_CASE("dense-coding margin stays nonnegative over random states") {
  double min_margin = std::numeric_limits<double>::infinity();
  for (std::int64_t i = 0; i < 1000; ++i) {
    min_margin = std::min(
        min_margin, capacity_coherence_margin(sample_check_state(555, i)));
  }
  CHECK(min_margin >= -1e-9);
}

TEST_CASE("noisy dense-coding margin stays nonnegative on the grid") {
  for (int k = 0; k <= 8; ++k) {
    const double theta = std::numbers::pi * k / 8.0;
    const DensityMatrix rho = densify(resource_state(theta), {{2, 2}});
    for (int j = 0; j <= 4; ++j) {
      const KrausChannel side = depolarizing_channel(j / 4.0, 2);
      CHECK(capacity_coherence_margin(rho, side, side) >= -1e-9);
    }
  }
}

TEST_CASE("teleportation margin at the Bell state is exactly saturated") {
  const DensityMatrix bell =
      densify(bell_state(Bell::PhiPlus), SubsystemDims{2, 2});
  const auto margin = fidelity_coherence_margin(bell);
  REQUIRE(margin.has_value());
  CHECK(std::abs(*margin) <= 1e-9);
}

TEST_CASE("teleportation margin is not applicable below the 2/3 line") {
  // theta = pi/2 at p = 0 gives fidelity 1/3.
  const DensityMatrix psi_plus =
      densify(bell_state(Bell::PsiPlus), SubsystemDims{2, 2});
  CHECK_FALSE(fidelity_coherence_margin(psi_plus).has_value());
}

TEST_CASE("teleportation margin is nonnegative when applicable") {
  int applicable = 0;
  for (std::int64_t i = 0; i < 600; ++i) {
    const DensityMatrix rho = sample_check_state(777, i);
    const auto margin = fidelity_coherence_margin(rho);
    if (margin) {
      ++applicable;
      CHECK(*margin >= -1e-9);
    }
  }
  CHECK(applicable > 0);
}

TEST_CASE("formation margin anchors and positivity") {
  const DensityMatrix bell =
      densify(bell_state(Bell::PhiPlus), SubsystemDims{2, 2});
  CHECK(std::abs(formation_coherence_margin(bell)) <= 1e-9);

  const DensityMatrix plus_plus =
      densify(resource_state(std::numbers::pi / 4), {{2, 2}});
  CHECK(std::abs(formation_coherence_margin(plus_plus)) <= 1e-9);

  for (std::int64_t i = 0; i < 800; ++i) {
    CHECK(formation_coherence_margin(sample_check_state(888, i)) >= -1e-9);
  }
}

TEST_CASE("run_margin_checks aggregates deterministically") {
  const VerifySummary a = run_margin_checks(200, 31415);
  const VerifySummary b = run_margin_checks(200, 31415);
  CHECK(a.dense_coding.samples == 200);
  CHECK(a.formation.samples == 200);
  CHECK(a.dense_coding.min_margin == b.dense_coding.min_margin);
  CHECK(a.teleportation.samples == b.teleportation.samples);
  CHECK(a.teleportation.min_margin == b.teleportation.min_margin);
  CHECK(a.formation.min_margin == b.formation.min_margin);
  CHECK(a.total_violations() == 0);
  REQUIRE(a.dense_coding.worst_state.has_value());
  CHECK(a.dense_coding.worst_state->dim() == 4);
}

TEST_CASE("evaluate_point reproduces the noiseless and fully noisy anchors") {
  const DensityMatrix bell = densify(resource_state(0.0), {{2, 2}});

  const SweepRecord clean = evaluate_point(bell, 0.0);
  CHECK(clean.capacity == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(clean.coherence_b == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(clean.fidelity == doctest::Approx(1.0).epsilon(1e-9));
  REQUIRE(clean.h_of_f.has_value());
  CHECK(*clean.h_of_f == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(clean.coherence_a == doctest::Approx(0.0).epsilon(1e-9));

  const SweepRecord noisy = evaluate_point(bell, 1.0);
  CHECK(noisy.capacity == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(noisy.fidelity == doctest::Approx(0.5).epsilon(1e-9));
  CHECK_FALSE(noisy.h_of_f.has_value());
}

TEST_CASE("sweep records keep their margins recomputable") {
  const auto records = sweep(9, 5);
  REQUIRE(records.size() == 45);
  for (const SweepRecord& rec : records) {
    CHECK(std::abs(rec.margin_dense_coding -
                   (2.0 - (rec.capacity + rec.coherence_b))) <= 1e-12);
    if (rec.margin_teleport) {
      REQUIRE(rec.h_of_f.has_value());
      CHECK(std::abs(*rec.margin_teleport -
                     (1.0 - (*rec.h_of_f + rec.coherence_a))) <= 1e-12);
    } else {
      CHECK(rec.fidelity < 2.0 / 3.0);
    }
    CHECK(rec.margin_dense_coding >= -1e-9);
  }
}

TEST_CASE("noiseless sweep line is symmetric about theta = pi/2") {
  const auto line = sweep_line(21, 0.0);
  REQUIRE(line.size() == 21);
  for (int k = 0; k < 21; ++k) {
    const SweepRecord& rec = line[static_cast<std::size_t>(k)];
    const SweepRecord& mirror = line[static_cast<std::size_t>(20 - k)];
    CHECK(std::abs(rec.capacity - mirror.capacity) <= 1e-9);
    CHECK(std::abs(rec.coherence_b - mirror.coherence_b) <= 1e-9);
  }
}

TEST_CASE("capacity dips exactly where local coherence peaks") {
  const auto line = sweep_line(61, 0.0);
  std::size_t argmin_capacity = 0;
  std::size_t argmax_coherence = 0;
  for (std::size_t i = 1; i < line.size(); ++i) {
    if (line[i].capacity < line[argmin_capacity].capacity) {
      argmin_capacity = i;
    }
    if (line[i].coherence_b > line[argmax_coherence].coherence_b) {
      argmax_coherence = i;
    }
  }
  CHECK(argmin_capacity == argmax_coherence);
  CHECK(*line[argmin_capacity].theta ==
        doctest::Approx(std::numbers::pi / 4));
}
