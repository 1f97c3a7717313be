#include "cohtrade/measures.hpp"

#include "cohtrade/linalg.hpp"
#include "cohtrade/verify.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace cohtrade;

namespace {

DensityMatrix random_two_qubit(std::uint64_t seed, int rank) {
  return sample_random_mixed(4, rank, seed).with_subsystems({2, 2});
}

DensityMatrix random_product_state(std::uint64_t seed) {
  const DensityMatrix a = sample_random_mixed(2, 2, seed);
  const DensityMatrix b = sample_random_mixed(2, 2, seed + 1);
  return DensityMatrix(kron(a.mat(), b.mat()), {{2, 2}});
}

}  // namespace

TEST_CASE("relative_entropy_coherence vanishes exactly on diagonal states") {
  Matrix diag = Matrix::Zero(3, 3);
  diag(0, 0) = 0.5;
  diag(1, 1) = 0.3;
  diag(2, 2) = 0.2;
  CHECK(relative_entropy_coherence(DensityMatrix(diag)) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("relative_entropy_coherence of the plus state is one bit") {
  Matrix plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  CHECK(relative_entropy_coherence(DensityMatrix(plus)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("coherence of the reduced resource state has a closed form") {
  for (int k = 0; k <= 30; ++k) {
    const double theta = std::numbers::pi * k / 30.0;
    const DensityMatrix rho = densify(resource_state(theta), {{2, 2}});
    const DensityMatrix rho_b(
        partial_trace(rho.mat(), {2, 2}, Subsystem::B));
    const double want =
        1.0 -
        binary_entropy(0.5 * (1.0 + std::abs(std::sin(2.0 * theta))));
    CHECK(relative_entropy_coherence(rho_b) ==
          doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("coherence is nonnegative and zero only without off-diagonals") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const DensityMatrix rho = sample_random_mixed(3, 3, 2000 + seed);
    const double c = relative_entropy_coherence(rho);
    CHECK(c >= 0.0);
    Matrix off_diag = rho.mat();
    off_diag.diagonal().setZero();
    if (off_diag.cwiseAbs().maxCoeff() > 1e-3) {
      CHECK(c > 0.0);
    }
  }
}

TEST_CASE("coherence is invariant under diagonal phase conjugation") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(3000 + seed);
    const DensityMatrix rho = sample_random_mixed(4, 4, 3100 + seed);
    Matrix phases = Matrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) {
      phases(i, i) = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
    }
    const DensityMatrix rotated(phases * rho.mat() * phases.adjoint());
    CHECK(std::abs(relative_entropy_coherence(rotated) -
                   relative_entropy_coherence(rho)) <= 1e-10);
  }
}

TEST_CASE("concurrence anchors: Bell states and product states") {
  for (const Bell kind :
       {Bell::PhiPlus, Bell::PhiMinus, Bell::PsiPlus, Bell::PsiMinus}) {
    CHECK(concurrence(densify(bell_state(kind), {{2, 2}})) ==
          doctest::Approx(1.0).epsilon(1e-10));
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(concurrence(random_product_state(4000 + 3 * seed)) ==
          doctest::Approx(0.0).epsilon(1e-8));
  }
  CHECK_THROWS_AS(concurrence(sample_random_mixed(3, 3, 1)),
                  DimensionMismatch);
}

TEST_CASE("concurrence of the tilted resource is |cos 2 theta|") {
  for (int k = 0; k <= 30; ++k) {
    const double theta = std::numbers::pi * k / 30.0;
    // Pure-state value 2|ad - bc| on amplitudes (c, s, s, c)/sqrt(2).
    const double want = std::abs(std::cos(2.0 * theta));
    CHECK(concurrence(densify(resource_state(theta), {{2, 2}})) ==
          doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("negativity anchors") {
  CHECK(negativity(densify(bell_state(Bell::PhiPlus), {{2, 2}})) ==
        doctest::Approx(1.0).epsilon(1e-10));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(negativity(random_product_state(5000 + 3 * seed)) ==
          doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("negativity never exceeds concurrence") {
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const DensityMatrix rho = random_two_qubit(6000 + seed, 1 + seed % 4);
    CHECK(negativity(rho) <= concurrence(rho) + 1e-9);
  }
}

TEST_CASE("entanglement_of_formation endpoints and closed form") {
  CHECK(entanglement_of_formation(
            densify(bell_state(Bell::PhiPlus), {{2, 2}})) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(entanglement_of_formation(random_product_state(7000)) ==
        doctest::Approx(0.0).epsilon(1e-7));
  for (int k = 0; k <= 20; ++k) {
    const double theta = std::numbers::pi * k / 20.0;
    const double want =
        binary_entropy(0.5 * (1.0 + std::abs(std::sin(2.0 * theta))));
    CHECK(entanglement_of_formation(
              densify(resource_state(theta), {{2, 2}})) ==
          doctest::Approx(want).epsilon(1e-8));
  }
}

TEST_CASE("pure-state formation equals the reduced entropy") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const DensityMatrix rho =
        densify(sample_random_pure(SubsystemDims{2, 2}, 8000 + seed),
                SubsystemDims{2, 2});
    const DensityMatrix rho_a(
        partial_trace(rho.mat(), {2, 2}, Subsystem::A));
    CHECK(std::abs(entanglement_of_formation(rho) -
                   von_neumann_entropy(rho_a)) <= 1e-9);
  }
}

TEST_CASE("formation plus local coherence stays below one bit") {
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const DensityMatrix rho = random_two_qubit(9000 + seed, 1 + seed % 4);
    const DensityMatrix rho_a(
        partial_trace(rho.mat(), {2, 2}, Subsystem::A));
    CHECK(entanglement_of_formation(rho) +
              relative_entropy_coherence(rho_a) <=
          1.0 + 1e-9);
  }
}
