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

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qcc/pauli.hpp"
#include "qcc/simstate.hpp"
#include "test_util.hpp"

namespace qcc {
namespace {

using testing::random_hamiltonian;
using testing::random_word;

constexpr cplx kI{0, 1};

PauliWord W(const char* s, int n) { return PauliWord::parse(s, n); }

DenseMatrix dense_exp(const PauliWord& p, double tau) {
  const auto dim = std::size_t{1} << p.n_qubits();
  return std::cos(tau / 2) * DenseMatrix::Identity(dim, dim) -
         kI * std::sin(tau / 2) * to_matrix(p);
}

TEST(PauliWord, ParseAndFormat) {
  const auto w = W("y0 x2", 3);
  EXPECT_EQ(w.to_string(), "X2 Y0");
  EXPECT_EQ(w.length(), 2);
  EXPECT_EQ(w.qubits(), (std::vector<int>{0, 2}));
  EXPECT_EQ(w.axis(1), std::nullopt);
  EXPECT_EQ(w.axis(0), Axis::Y);
  EXPECT_TRUE(W("I", 3).is_identity());
  EXPECT_TRUE(W("", 3).is_identity());
  EXPECT_EQ(W("I", 3).to_string(), "I");
  EXPECT_EQ(PauliWord::parse(w.to_string(), 3), w);
}

TEST(PauliWord, ParseErrors) {
  EXPECT_THROW(W("X3", 3), std::invalid_argument);
  EXPECT_THROW(W("Q1", 3), std::invalid_argument);
  EXPECT_THROW(W("X1 Y1", 3), std::invalid_argument);
  EXPECT_THROW(W("X", 3), std::invalid_argument);
}

TEST(Multiply, SingleQubitRelations) {
  const auto xy = W("X0", 1) * W("Y0", 1);
  EXPECT_EQ(xy.without_phase(), W("Z0", 1));
  EXPECT_EQ(xy.phase(), kI);
  const auto zz = W("Z0", 1) * W("Z0", 1);
  EXPECT_TRUE(zz.is_identity());
  EXPECT_EQ(zz.phase_exponent(), 0);
}

TEST(Multiply, TwoQubitProductMatchesMatrices) {
  const auto a = W("X2 Y0", 3), b = W("Y2 X0", 3);
  const auto ab = a * b;
  EXPECT_EQ(ab.without_phase(), W("Z2 Z0", 3));
  EXPECT_EQ(ab.phase_exponent(), 0);
  EXPECT_LT((to_matrix(a) * to_matrix(b) - to_matrix(ab)).norm(), 1e-14);
}

TEST(Multiply, QubitCountMismatchThrows) {
  EXPECT_THROW(W("X0", 1) * W("X0", 2), std::invalid_argument);
}

TEST(Multiply, GroupLawsOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const auto a = random_word(rng, 5).with_phase(t % 4);
    const auto b = random_word(rng, 5).with_phase((t / 4) % 4);
    const auto c = random_word(rng, 5);
    EXPECT_EQ((a * b) * c, a * (b * c));
    const auto sq = a.without_phase() * a.without_phase();
    EXPECT_TRUE(sq.is_identity());
    EXPECT_EQ(sq.phase_exponent(), 0);
    const auto ab = a * b;
    EXPECT_GE(ab.phase_exponent(), 0);
    EXPECT_LT(ab.phase_exponent(), 4);
    EXPECT_LE(ab.length(), a.length() + b.length());
    EXPECT_LT((to_matrix(a) * to_matrix(b) - to_matrix(ab)).norm(), 1e-13);
    EXPECT_EQ(a.commutes_with(b), (a * b) == (b * a));
  }
}

TEST(Commutator, Examples) {
  const auto yz = commutator(W("Y1", 2), W("Z1", 2));
  ASSERT_EQ(yz.size(), 1u);
  EXPECT_NEAR(std::abs(yz.coefficient(W("X1", 2)) - 2.0 * kI), 0, 1e-15);
  EXPECT_TRUE(commutator(W("Z0", 2), W("Z1", 2)).empty());
  EXPECT_TRUE(commutator(W("X2 Y0", 3), W("Z2 Z0", 3)).empty());
  const DenseMatrix m = to_matrix(W("X2 Y0", 3)) * to_matrix(W("Z2 Z0", 3)) -
                 to_matrix(W("Z2 Z0", 3)) * to_matrix(W("X2 Y0", 3));
  EXPECT_LT(m.norm(), 1e-14);
}

TEST(SumCommutator, Examples) {
  PauliSum h(1);
  h.add(W("Z0", 1), 0.5);
  const auto c = sum_commutator(h, W("X0", 1));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_NEAR(std::abs(c.coefficient(W("Y0", 1)) - kI), 0, 1e-15);

  PauliSum id(3);
  id.add(PauliWord(3), 1.7);
  EXPECT_TRUE(sum_commutator(id, W("X2 Y0", 3)).empty());
}

TEST(SumCommutator, H2MatchesDenseCommutator) {
  const auto p = testing::h2_problem();
  const auto w = W("X2 Y0", 4);
  const auto c = sum_commutator(p.hamiltonian, w);
  EXPECT_FALSE(c.empty());
  const auto h = to_matrix(p.hamiltonian), pm = to_matrix(w);
  EXPECT_LT((to_matrix(c) - (h * pm - pm * h)).norm(), 1e-12);
}

TEST(SumCommutator, ITimesCommutatorIsHermitian) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto h = random_hamiltonian(rng, 4, 12);
    const auto c = sum_commutator(h, random_word(rng, 4)) * kI;
    EXPECT_TRUE(c.is_hermitian(1e-14));
  }
}

TEST(SimilarityTransform, Examples) {
  PauliSum z(1);
  z.add(W("Z0", 1), 1.0);
  EXPECT_EQ(similarity_transform(z, W("X0", 1), 0.0).max_abs_diff(z), 0.0);
  const auto flipped = similarity_transform(z, W("X0", 1), std::numbers::pi);
  EXPECT_LT(flipped.max_abs_diff(z * -1.0), 1e-15);
}

TEST(SimilarityTransform, RejectsNonUnitPhase) {
  PauliSum z(1);
  z.add(W("Z0", 1), 1.0);
  EXPECT_THROW(similarity_transform(z, W("X0", 1).with_phase(1), 0.3),
               std::invalid_argument);
}

TEST(SimilarityTransform, MatchesDenseConjugation) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(-std::numbers::pi,
                                               std::numbers::pi);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 6;
    const auto h = random_hamiltonian(rng, n, 3 + t % 10);
    const auto p = random_word(rng, n);
    const double tau = angle(rng);
    const auto g = similarity_transform(h, p, tau);
    const auto u = dense_exp(p, tau);
    const DenseMatrix ref = u.adjoint() * to_matrix(h) * u;
    EXPECT_LT((to_matrix(g) - ref).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_TRUE(g.is_hermitian(1e-12));
    EXPECT_LE(g.size(), 3 * h.size());
    EXPECT_LT(similarity_transform_expanded(h, p, tau).max_abs_diff(g), 1e-12);
  }
}

TEST(SimilarityTransform, AmplitudePeriodicity) {
  std::mt19937_64 rng(9);
  const auto h = random_hamiltonian(rng, 4, 15);
  const auto p = random_word(rng, 4, 3);
  const auto a = similarity_transform(h, p, 0.4);
  const auto b = similarity_transform(h, p, 0.4 + 2 * std::numbers::pi);
  EXPECT_LT(a.max_abs_diff(b), 1e-12);
}

TEST(PauliSum, MergesAndDrops) {
  PauliSum h(2);
  h.add(W("X0", 2), 0.5).add(W("X0", 2), -0.5);
  EXPECT_TRUE(h.empty());
  h.add(W("Z1", 2), 1e-13);
  EXPECT_TRUE(h.empty());
  h.add(W("Z1", 2).with_phase(2), 1.0);
  EXPECT_EQ(h.coefficient(W("Z1", 2)), cplx(-1.0));
  PauliSum loose(2, 1e-3);
  loose.add(W("Z1", 2), 1e-4);
  EXPECT_TRUE(loose.empty());
}

TEST(PauliSum, QubitCountMismatchThrows) {
  PauliSum h(2);
  EXPECT_THROW(h.add(W("X0", 3)), std::invalid_argument);
  EXPECT_THROW(sum_commutator(h, W("X0", 3)), std::invalid_argument);
}

TEST(EnumerateEntanglers, Counts) {
  EXPECT_EQ(enumerate_entanglers(4, 2, 4).size(), 243u);
  EXPECT_EQ(enumerate_entanglers(4, 2, 2).size(), 54u);
  EXPECT_EQ(enumerate_entanglers(2, 2, 2).size(), 9u);
  for (int n = 2; n <= 6; ++n) {
    const auto expected = entangler_count(n);
    EXPECT_EQ(expected, (std::uint64_t{1} << (2 * n)) - 3 * n - 1);
    EXPECT_EQ(enumerate_entanglers(n, 2, n).size(), expected);
  }
}

TEST(EnumerateEntanglers, OrderAndContents) {
  const auto ws = enumerate_entanglers(3, 2, 3);
  for (std::size_t k = 0; k < ws.size(); ++k) {
    EXPECT_EQ(ws[k].phase_exponent(), 0);
    EXPECT_GE(ws[k].length(), 2);
    if (k > 0) EXPECT_NE(ws[k - 1], ws[k]);
  }
  EXPECT_EQ(ws, enumerate_entanglers(3, 2, 3));
}

TEST(EnumerateEntanglers, BoundsErrors) {
  EXPECT_THROW(enumerate_entanglers(4, 1, 3), std::invalid_argument);
  EXPECT_THROW(enumerate_entanglers(4, 3, 2), std::invalid_argument);
  EXPECT_THROW(enumerate_entanglers(4, 2, 5), std::invalid_argument);
}

}  // namespace
}  // namespace qcc
