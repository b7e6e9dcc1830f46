// Copyright 2026 The qcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qcc/meanfield.hpp"
#include "qcc/simstate.hpp"
#include "test_util.hpp"

namespace qcc {
namespace {

using testing::random_hamiltonian;
using testing::random_word;

constexpr cplx kI{0, 1};

PauliWord W(const char* s, int n) { return PauliWord::parse(s, n); }

PauliSum single(const char* s, int n, double c = 1.0) {
  PauliSum h(n);
  h.add(W(s, n), c);
  return h;
}

StateVector random_state(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  Amplitudes a(std::size_t{1} << n);
  for (auto& v : a) v = {g(rng), g(rng)};
  return {n, a};
}

TEST(ToMatrix, SingleQubitZ) {
  const auto m = to_matrix(single("Z0", 1));
  EXPECT_EQ(m(0, 0), cplx(1));
  EXPECT_EQ(m(1, 1), cplx(-1));
  EXPECT_EQ(m(0, 1), cplx(0));
}

TEST(ToMatrix, QubitZeroIsLeastSignificant) {
  const auto m = to_matrix(single("X0", 2));
  // I (qubit 1) tensor X (qubit 0): flips bit 0 of the basis index.
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      EXPECT_EQ(m(r, c), cplx((r ^ 1) == c ? 1.0 : 0.0));
    }
  }
}

TEST(ToMatrix, LiHReducedIsHermitian16) {
  const auto p = testing::lih_reduced("lih/lih_R1.50.ham");
  const auto m = to_matrix(p.hamiltonian);
  EXPECT_EQ(m.rows(), 16);
  EXPECT_LT((m - m.adjoint()).norm(), 1e-14);
}

TEST(ToMatrix, CapExceededThrows) {
  EXPECT_THROW(to_matrix(single("Z0", 13)), std::invalid_argument);
  EXPECT_NO_THROW(to_matrix(single("Z0", 3), 3));
  EXPECT_THROW(to_matrix(single("Z0", 4), 3), std::invalid_argument);
}

TEST(ExactGround, Examples) {
  const auto z = exact_ground(single("Z0", 1));
  ASSERT_EQ(z.eigenvalues.size(), 2);
  EXPECT_NEAR(z.eigenvalues[0], -1, 1e-15);
  EXPECT_NEAR(z.eigenvalues[1], 1, 1e-15);
  EXPECT_EQ(z.ground_energy, z.eigenvalues[0]);

  PauliSum h(2);
  h.add(W("X0 X1", 2), 1.0).add(W("Z0", 2), 1.0).add(W("Z1", 2), 1.0);
  const auto r = exact_ground(h);
  EXPECT_NEAR(r.ground_energy, -std::sqrt(5.0), 1e-13);
  ASSERT_TRUE(r.ground_vector);
  EXPECT_NEAR(expectation(*r.ground_vector, h), r.ground_energy, 1e-13);
}

TEST(ExactGround, H2RegressionPin) {
  const auto r = exact_ground(testing::h2_problem().hamiltonian, false);
  EXPECT_NEAR(r.ground_energy, -1.10115033023262, 1e-11);
  EXPECT_FALSE(r.ground_vector);
  for (int k = 1; k < r.eigenvalues.size(); ++k) {
    EXPECT_LE(r.eigenvalues[k - 1], r.eigenvalues[k]);
  }
}

TEST(ExactGround, NonHermitianThrows) {
  PauliSum h(1);
  h.add(W("Z0", 1), kI);
  EXPECT_THROW(exact_ground(h), std::invalid_argument);
  EXPECT_THROW(expectation(StateVector(1), h), std::invalid_argument);
}

TEST(ApplyPauliExp, Examples) {
  const StateVector zero(1);
  const auto same = apply_pauli_exp(zero, W("X0", 1), 0.0);
  EXPECT_LT((same.amplitudes() - zero.amplitudes()).norm(), 1e-15);
  const auto flipped = apply_pauli_exp(zero, W("X0", 1), std::numbers::pi);
  EXPECT_LT(std::abs(flipped.amplitudes()[0]), 1e-15);
  EXPECT_LT(std::abs(flipped.amplitudes()[1] + kI), 1e-15);
}

TEST(ApplyPauliExp, PeriodicityAndNorm) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto s = random_state(rng, 5);
    const auto p = random_word(rng, 5);
    const auto r = apply_pauli_exp(s, p, 4 * std::numbers::pi);
    EXPECT_LT((r.amplitudes() - s.amplitudes()).norm(), 1e-12);
    EXPECT_NEAR(apply_pauli_exp(s, p, 0.37 * t).amplitudes().norm(), 1, 1e-12);
  }
}

TEST(ApplyPauliExp, RejectsNonUnitPhase) {
  EXPECT_THROW(apply_pauli_exp(StateVector(1), W("X0", 1).with_phase(2), 0.1),
               std::invalid_argument);
}

TEST(ApplyPauliExp, MatchesMatrixExponential) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> angle(-4, 4);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 5;
    auto s = random_state(rng, n);
    Amplitudes v = s.amplitudes();
    for (int k = 0; k < 3; ++k) {
      const auto p = random_word(rng, n);
      const double tau = angle(rng);
      const DenseMatrix gen = (-kI * tau / 2.0) * to_matrix(p);
      v = gen.exp() * v;
      s = apply_pauli_exp(s, p, tau);
    }
    EXPECT_LT((v - s.amplitudes()).norm(), 1e-10);
  }
}

TEST(ApplyPauli, MatchesMatrix) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 50; ++t) {
    const auto s = random_state(rng, 4);
    const auto w = random_word(rng, 4).with_phase(t % 4);
    const Amplitudes ref = to_matrix(w) * s.amplitudes();
    EXPECT_LT((apply_pauli(s, w).amplitudes() - ref).norm(), 1e-13);
  }
}

TEST(Expectation, Examples) {
  EXPECT_NEAR(expectation(StateVector(1), single("Z0", 1)), 1, 1e-15);
  Amplitudes plus(2);
  plus << 1, 1;
  EXPECT_NEAR(expectation(StateVector(1, plus), single("Z0", 1)), 0, 1e-15);
}

TEST(Expectation, QmfStateMatchesQmfEnergy) {
  const auto p = testing::h2_problem();
  const auto r = qmf_minimize(p);
  EXPECT_NEAR(expectation(product_state(r.config), p.hamiltonian), r.energy,
              1e-10);
}

TEST(Expectation, GlobalPhaseInvariance) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 30; ++t) {
    const auto h = random_hamiltonian(rng, 4, 10);
    const auto s = random_state(rng, 4);
    const StateVector rotated(4, s.amplitudes() * std::polar(1.0, 0.3 * t));
    EXPECT_NEAR(expectation(s, h), expectation(rotated, h), 1e-12);
  }
}

TEST(Spectrum, IsospectralUnderPauliExponentials) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 20; ++t) {
    const auto h = random_hamiltonian(rng, 4, 12);
    const auto base = exact_ground(h, false).eigenvalues;
    PauliSum g = h;
    for (int k = 0; k < 3; ++k) {
      g = similarity_transform(g, random_word(rng, 4), 0.7 * (k + 1));
    }
    EXPECT_LT((exact_ground(g, false).eigenvalues - base).cwiseAbs().maxCoeff(),
              1e-10);
  }
}

TEST(StateVector, ConstructionNormalizes) {
  Amplitudes a(4);
  a << 1, 2, 3, 4;
  const StateVector s(2, a);
  EXPECT_NEAR(s.amplitudes().norm(), 1, 1e-15);
  EXPECT_THROW(StateVector(2, Amplitudes::Zero(4)), std::invalid_argument);
  EXPECT_THROW(StateVector(2, Amplitudes::Ones(3)), std::invalid_argument);
  const auto b = StateVector::basis(3, 5);
  EXPECT_EQ(b.amplitudes()[5], cplx(1));
  EXPECT_NEAR(expectation(b, single("Z1", 3)), 1, 1e-15);
  EXPECT_NEAR(expectation(b, single("Z2", 3)), -1, 1e-15);
}

}  // namespace
}  // namespace qcc
