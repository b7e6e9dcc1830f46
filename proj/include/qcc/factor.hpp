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

// Exact factorization of exp(-i t P) into exponentials of words acting on at
// most two qubits. Writing P = P1 w_k P2 with a pivot factor w_k and a pair
// (w', w'') satisfying [w', w''] = 2i w_k,
//
//   exp(-i t P) = exp(+i pi/4 A) exp(-i t B) exp(-i pi/4 A),
//   A = w'' P2 (the qubits below the pivot), B = P1 w' (the pivot and above),
//
// applied recursively to every factor longer than two qubits.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcc/pauli.hpp"
#include "qcc/simstate.hpp"

namespace qcc {

enum class FactorKind {
  Variable,    ///< exp(-i t G)
  FixedPlus,   ///< exp(+i pi/4 G)
  FixedMinus,  ///< exp(-i pi/4 G)
};

struct Factor {
  PauliWord generator;
  FactorKind kind;
};

/// Ordered factor list; the leftmost factor acts last on a ket.
struct FactorizedExp {
  PauliWord word;
  std::vector<Factor> factors;

  std::size_t two_qubit_count() const;
  std::size_t variable_count() const;
};

/// (B, A) = (P1 w', w'' P2) for |p| >= 3. The pivot is the median of the
/// ascending support (lower median for even length).
std::pair<PauliWord, PauliWord> split_once(const PauliWord& p);

/// Recursive factorization; |p| = 2 yields the single Variable factor.
FactorizedExp factorize(const PauliWord& p);

/// prod_f exp(...) |s> at amplitude t; equals apply_pauli_exp(s, word, 2 t).
StateVector apply_factorized(const StateVector& s, const FactorizedExp& f,
                             double t);

/// Dense product of the factors at amplitude t.
DenseMatrix factorized_matrix(const FactorizedExp& f, double t);

/// One "EXP(<coeff>) <word>" line per factor plus a summary line.
std::string format_factorization(const FactorizedExp& f);

}  // namespace qcc
