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

// QCC energy E(tau, Omega) = <Omega| U(tau)^dag H U(tau) |Omega> with
// U(tau) = prod_k exp(-i tau_k P_k / 2), k = 1 leftmost (applied last to the
// ket), and its joint minimization over amplitudes and Bloch angles.

#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "qcc/hamio.hpp"
#include "qcc/meanfield.hpp"
#include "qcc/pauli.hpp"
#include "qcc/simstate.hpp"

namespace qcc {

/// Transformed-Hamiltonian size above which the statevector path is used.
inline constexpr std::size_t kStatevectorThreshold = 20000;

struct Entangler {
  PauliWord generator;
  double amplitude = 0;  ///< tau, radians
};

class EntanglerSet {
 public:
  EntanglerSet() = default;
  explicit EntanglerSet(int n_qubits) : n_qubits_(n_qubits) {}
  /// Amplitudes default to zero.
  EntanglerSet(int n_qubits, const std::vector<PauliWord>& generators,
               const std::vector<double>& amplitudes = {});

  /// Throws std::invalid_argument for a generator with a non-unit phase,
  /// fewer than two qubits, or the wrong qubit count.
  EntanglerSet& add(const PauliWord& generator, double amplitude = 0);

  int n_qubits() const { return n_qubits_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<Entangler>& entries() const { return entries_; }
  const Entangler& operator[](std::size_t k) const { return entries_[k]; }

  std::vector<PauliWord> generators() const;
  Eigen::VectorXd amplitudes() const;
  void set_amplitudes(const Eigen::VectorXd& tau);

  /// 2 N_q + N_ent.
  int parameter_count() const {
    return 2 * n_qubits_ + static_cast<int>(entries_.size());
  }

 private:
  int n_qubits_ = 0;
  std::vector<Entangler> entries_;
};

enum class EnergyPath { Auto, Transform, Statevector };

/// U(tau)^dag H U(tau) by repeated closed-form transforms, outermost (k = 1)
/// first. Returns nullopt as soon as an intermediate exceeds `max_terms`.
std::optional<PauliSum> dressed_hamiltonian(
    const PauliSum& h, const EntanglerSet& ents,
    std::size_t max_terms = std::numeric_limits<std::size_t>::max());

/// U(tau) |Omega>.
StateVector qcc_state(const EntanglerSet& ents, const BlochConfig& omega);

double qcc_energy(const PauliSum& h, const EntanglerSet& ents,
                  const BlochConfig& omega, EnergyPath path = EnergyPath::Auto);
double qcc_energy(const ProblemInstance& problem, const EntanglerSet& ents,
                  const BlochConfig& omega, EnergyPath path = EnergyPath::Auto);

/// dE/dtau_k for every entangler.
Eigen::VectorXd amplitude_gradient(const PauliSum& h, const EntanglerSet& ents,
                                   const BlochConfig& omega,
                                   EnergyPath path = EnergyPath::Auto);
Eigen::VectorXd amplitude_gradient(const ProblemInstance& problem,
                                   const EntanglerSet& ents,
                                   const BlochConfig& omega,
                                   EnergyPath path = EnergyPath::Auto);

/// Energy and joint gradient. `params` holds the 2 N_q flat Bloch angles
/// followed by the N_ent amplitudes.
double qcc_energy_and_gradient(const PauliSum& h,
                               const std::vector<PauliWord>& generators,
                               const Eigen::VectorXd& params,
                               Eigen::VectorXd& grad,
                               EnergyPath path = EnergyPath::Auto,
                               std::size_t threshold = kStatevectorThreshold);

struct QccOptions {
  QmfOptions qmf;  ///< seeds, tolerances and iteration cap
  double penalty = kDefaultPenalty;
  /// Also start from the spin-constrained QMF solution when S^2 is known.
  bool constrained_seed = true;
  int random_starts = 8;  ///< tau ~ U[-0.5, 0.5], random angles
  bool record_history = true;
  EnergyPath path = EnergyPath::Auto;
  std::size_t statevector_threshold = kStatevectorThreshold;
  int jobs = 1;
};

struct QccResult {
  double energy = 0;
  Eigen::VectorXd amplitudes;
  BlochConfig config;
  EntanglerSet entanglers;
  std::optional<double> spin_expectation;
  std::optional<double> number_expectation;
  bool converged = false;
  double grad_norm = 0;
  int best_start = 0;
  int parameter_count = 0;
  double qmf_energy = 0;  ///< unconstrained QMF seed energy
  std::vector<double> history;  ///< energy per accepted step of the best start
};

/// Joint local minimization over (Omega, tau) from several starts: the
/// unconstrained QMF solution with tau = 0 (start 0), the constrained QMF
/// solution with tau = 0 when S^2 is available, then random starts. The lowest
/// energy wins, ties going to the earlier start.
QccResult qcc_minimize(const ProblemInstance& problem,
                       const std::vector<PauliWord>& generators,
                       const QccOptions& opts = {});

/// Single local minimization from the given amplitudes and angles.
QccResult qcc_minimize_from(const ProblemInstance& problem,
                            const EntanglerSet& start,
                            const BlochConfig& omega,
                            const QccOptions& opts = {});

}  // namespace qcc
