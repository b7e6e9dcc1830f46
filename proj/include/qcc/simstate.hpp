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

// Dense statevector oracle. Basis index bit q is qubit q (qubit 0 least
// significant), so |k> has qubit q in state |1> iff (k >> q) & 1.

#pragma once

#include <Eigen/Dense>
#include <optional>

#include "qcc/pauli.hpp"

namespace qcc {

inline constexpr int kDenseQubitCap = 12;

using DenseMatrix = Eigen::MatrixXcd;
using Amplitudes = Eigen::VectorXcd;

/// Normalized 2^n amplitude vector.
class StateVector {
 public:
  /// |0...0>.
  explicit StateVector(int n_qubits);
  /// Normalizes `amps`; throws if its length is not a power of two or it is
  /// the zero vector.
  StateVector(int n_qubits, Amplitudes amps);

  static StateVector basis(int n_qubits, std::uint64_t index);

  int n_qubits() const { return n_qubits_; }
  const Amplitudes& amplitudes() const { return amps_; }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }

  cplx inner(const StateVector& other) const { return amps_.dot(other.amps_); }

 private:
  friend StateVector apply_pauli_exp(const StateVector&, const PauliWord&,
                                     double);
  friend StateVector apply_pauli(const StateVector&, const PauliWord&);
  struct Unchecked {};
  StateVector(int n_qubits, Amplitudes amps, Unchecked)
      : n_qubits_(n_qubits), amps_(std::move(amps)) {}

  int n_qubits_;
  Amplitudes amps_;
};

struct SpectrumResult {
  Eigen::VectorXd eigenvalues;  // ascending
  double ground_energy = 0;
  std::optional<StateVector> ground_vector;
};

/// Dense 2^n x 2^n matrix of a PauliSum. Throws above `cap` qubits.
DenseMatrix to_matrix(const PauliSum& h, int cap = kDenseQubitCap);
DenseMatrix to_matrix(const PauliWord& w, int cap = kDenseQubitCap);

/// Full spectrum by dense Hermitian eigensolve. Throws for non-Hermitian
/// input or above the qubit cap.
SpectrumResult exact_ground(const PauliSum& h, bool want_vector = true,
                            int cap = kDenseQubitCap);

/// w |s> for a unit-phase-magnitude word (any of the four phases).
StateVector apply_pauli(const StateVector& s, const PauliWord& w);
Amplitudes apply_pauli_amps(const Amplitudes& amps, const PauliWord& w);

/// H |s> as a raw (unnormalized) amplitude vector.
Amplitudes apply_sum(const PauliSum& h, const Amplitudes& amps);

/// exp(-i tau p / 2) |s> = cos(tau/2) s - i sin(tau/2) p s, in place over the
/// amplitudes.
StateVector apply_pauli_exp(const StateVector& s, const PauliWord& p,
                            double tau);
/// Same rotation on raw (not necessarily normalized) amplitudes.
Amplitudes apply_pauli_exp_amps(const Amplitudes& amps, const PauliWord& p,
                                double tau);

/// <s|h|s> without a Hermiticity check.
cplx expectation_complex(const StateVector& s, const PauliSum& h);

/// Real <s|h|s>; throws on non-Hermitian h or an imaginary residue > 1e-10.
double expectation(const StateVector& s, const PauliSum& h);

}  // namespace qcc
