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
#include <random>
#include <stdexcept>

#include "qcc/factor.hpp"
#include "qcc/hamio.hpp"
#include "test_util.hpp"

namespace qcc {
namespace {

using testing::random_word;

PauliWord W(const char* s, int n) { return PauliWord::parse(s, n); }

DenseMatrix exact_exp(const PauliWord& p, double t) {
  return (cplx(0, -t) * to_matrix(p)).exp();
}

StateVector random_state(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  Amplitudes a(std::size_t{1} << n);
  for (auto& v : a) v = {g(rng), g(rng)};
  return {n, a};
}

TEST(SplitOnce, ThreeQubitExample) {
  const auto [b, a] = split_once(W("X2 X1 Y0", 3));
  EXPECT_EQ(b, W("X2 Y1", 3));
  EXPECT_EQ(a, W("Z1 Y0", 3));
  // Product of the parts is i times the word.
  const auto prod = b * a;
  EXPECT_EQ(prod.without_phase(), W("X2 X1 Y0", 3));
  EXPECT_EQ(prod.phase_exponent(), 1);
}

TEST(SplitOnce, Lengths) {
  const auto [b4, a4] = split_once(W("Z3 Y2 Z1 X0", 4));
  EXPECT_EQ(std::min(b4.length(), a4.length()), 2);
  EXPECT_EQ(std::max(b4.length(), a4.length()), 3);
  std::mt19937_64 rng(51);
  for (int t = 0; t < 200; ++t) {
    const int len = 3 + t % 6;
    const auto p = random_word(rng, 8, len);
    const auto [b, a] = split_once(p);
    EXPECT_LE(b.length(), len / 2 + 1);
    EXPECT_LE(a.length(), len / 2 + 1);
    EXPECT_EQ(b.length() + a.length(), len + 1);
    if (len == 3) {
      EXPECT_EQ(b.length(), 2);
      EXPECT_EQ(a.length(), 2);
    }
    EXPECT_FALSE(b.commutes_with(a));
  }
}

TEST(SplitOnce, Errors) {
  EXPECT_THROW(split_once(W("X1 Y0", 2)), std::invalid_argument);
  EXPECT_THROW(split_once(W("X2 X1 Y0", 3).with_phase(2)),
               std::invalid_argument);
}

TEST(Factorize, BaseCases) {
  const auto f2 = factorize(W("X1 Y0", 2));
  ASSERT_EQ(f2.factors.size(), 1u);
  EXPECT_EQ(f2.factors[0].kind, FactorKind::Variable);
  const auto f3 = factorize(W("X2 X1 Y0", 3));
  ASSERT_EQ(f3.factors.size(), 3u);
  EXPECT_EQ(f3.factors[0].kind, FactorKind::FixedPlus);
  EXPECT_EQ(f3.factors[1].kind, FactorKind::Variable);
  EXPECT_EQ(f3.factors[2].kind, FactorKind::FixedMinus);
  EXPECT_EQ(f3.two_qubit_count(), 3u);
  EXPECT_THROW(factorize(W("X0", 2)), std::invalid_argument);
}

TEST(Factorize, FourQubitMatrixIdentity) {
  const auto p = W("Z3 X2 X1 Y0", 4);
  const auto f = factorize(p);
  for (const auto& fac : f.factors) EXPECT_LE(fac.generator.length(), 2);
  EXPECT_EQ(f.two_qubit_count(), f.factors.size());
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> tdist(-4, 4);
  for (int k = 0; k < 20; ++k) {
    const double t = tdist(rng);
    EXPECT_LT((factorized_matrix(f, t) - exact_exp(p, t)).cwiseAbs().maxCoeff(),
              1e-12);
  }
}

TEST(Factorize, StructuralProperties) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 100; ++t) {
    const auto p = random_word(rng, 8, 2 + t % 7);
    const auto f = factorize(p);
    EXPECT_EQ(f.variable_count(), 1u);
    for (const auto& fac : f.factors) {
      EXPECT_LE(fac.generator.length(), 2);
      EXPECT_EQ(fac.generator.phase_exponent(), 0);
    }
    // Palindromic generators with mirrored fixed kinds.
    const std::size_t n = f.factors.size();
    EXPECT_EQ(n % 2, 1u);
    for (std::size_t i = 0; i < n / 2; ++i) {
      const auto& l = f.factors[i];
      const auto& r = f.factors[n - 1 - i];
      EXPECT_EQ(l.generator, r.generator);
      if (l.kind == FactorKind::FixedPlus) EXPECT_EQ(r.kind, FactorKind::FixedMinus);
      if (l.kind == FactorKind::FixedMinus) EXPECT_EQ(r.kind, FactorKind::FixedPlus);
    }
    EXPECT_EQ(f.factors[n / 2].kind, FactorKind::Variable);
    const auto g = factorize(p);
    ASSERT_EQ(g.factors.size(), n);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(g.factors[i].generator, f.factors[i].generator);
      EXPECT_EQ(g.factors[i].kind, f.factors[i].kind);
    }
  }
}

TEST(Factorize, LiHSevenEntanglerSetHasThirtyOneTwoQubitFactors) {
  const auto gens =
      read_entangler_file(testing::data_path("lih/lih7.ent"), 4);
  ASSERT_EQ(gens.size(), 7u);
  std::size_t total = 0;
  for (const auto& g : gens) total += factorize(g).two_qubit_count();
  EXPECT_EQ(total, 31u);
}

TEST(ApplyFactorized, ZeroAmplitudeIsIdentity) {
  std::mt19937_64 rng(54);
  const auto s = random_state(rng, 5);
  const auto f = factorize(W("X4 Z3 Y2 X1 Y0", 5));
  EXPECT_LT((apply_factorized(s, f, 0).amplitudes() - s.amplitudes()).norm(),
            1e-12);
}

TEST(ApplyFactorized, MatchesDirectExponentialAndInverts) {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> tdist(-4, 4);
  const auto f = factorize(W("X2 X1 Y0", 3));
  for (int k = 0; k < 20; ++k) {
    const auto s = random_state(rng, 3);
    const double t = tdist(rng);
    const auto a = apply_factorized(s, f, t);
    const auto b = apply_pauli_exp(s, f.word, 2 * t);
    EXPECT_LT((a.amplitudes() - b.amplitudes()).norm(), 1e-12);
    const auto back = apply_factorized(a, f, -t);
    EXPECT_LT(1 - std::abs(s.inner(back)), 1e-12);
  }
}

TEST(FormatFactorization, TextLayout) {
  const auto text = format_factorization(factorize(W("X2 X1 Y0", 3)));
  EXPECT_EQ(text,
            "EXP(+i*pi/4) Z1 Y0\n"
            "EXP(-i*t) X2 Y1\n"
            "EXP(-i*pi/4) Z1 Y0\n"
            "# X2 X1 Y0: 3 factors, 3 two-qubit\n");
}

}  // namespace
}  // namespace qcc
