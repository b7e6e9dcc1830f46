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

// Qubit mean field: products of single-qubit coherent states
//   |Omega_q> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>,
// for which <x> = sin(theta)cos(phi), <y> = sin(theta)sin(phi), <z> = cos(theta)
// and the expectation of a Pauli word is the product over its support.

#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qcc/hamio.hpp"
#include "qcc/pauli.hpp"
#include "qcc/simstate.hpp"

namespace qcc {

inline constexpr double kDefaultPenalty = 2.0;
inline constexpr std::uint64_t kDefaultSeed = 52417;

struct BlochAngles {
  double theta = 0;  ///< polar, radians
  double phi = 0;    ///< azimuthal, radians
};

/// Per-qubit Bloch angles. Flat parameter order is theta_0, phi_0, theta_1, ...
class BlochConfig {
 public:
  BlochConfig() = default;
  explicit BlochConfig(int n_qubits) : angles_(n_qubits) {}
  explicit BlochConfig(std::vector<BlochAngles> angles)
      : angles_(std::move(angles)) {}

  static BlochConfig from_flat(const Eigen::VectorXd& flat);
  Eigen::VectorXd flat() const;

  int n_qubits() const { return static_cast<int>(angles_.size()); }
  BlochAngles& operator[](int q) { return angles_[q]; }
  const BlochAngles& operator[](int q) const { return angles_[q]; }
  const std::vector<BlochAngles>& angles() const { return angles_; }

  /// Maps every angle pair to the same state (up to global phase) with
  /// theta in [0, pi] and phi in [0, 2 pi).
  BlochConfig& normalize();

  /// (cos(theta/2), e^{i phi} sin(theta/2)) for qubit q.
  std::array<cplx, 2> spinor(int q) const;

 private:
  std::vector<BlochAngles> angles_;
};

/// d^(a+b) / d theta^a d phi^b of the two-component spinor of `angles`.
std::array<cplx, 2> spinor_derivative(const BlochAngles& angles, int d_theta,
                                      int d_phi);

StateVector product_state(const BlochConfig& omega);

/// <Omega|h|Omega> via the per-qubit factorization; complex for
/// non-Hermitian h.
cplx coherent_expectation_complex(const PauliSum& h, const BlochConfig& omega);

/// Real part of coherent_expectation_complex (the expectation for Hermitian h).
double coherent_expectation(const PauliSum& h, const BlochConfig& omega);

/// Analytic d<h>/d(theta_q), d<h>/d(phi_q) in flat order.
Eigen::VectorXd angle_gradient(const PauliSum& h, const BlochConfig& omega);

/// Energy and gradient at flat angles; the optimizer callback.
double coherent_energy_and_gradient(const PauliSum& h,
                                    const Eigen::VectorXd& flat,
                                    Eigen::VectorXd& grad);

struct QmfOptions {
  int restarts = 32;  ///< 1 field-guided start + (restarts - 1) random starts
  std::uint64_t seed = kDefaultSeed;
  double grad_tol = 1e-8;
  double energy_tol = 1e-10;
  int max_iter = 2000;
  int jobs = 1;
  /// Tried in addition to `restarts`, after the field-guided start.
  std::vector<BlochConfig> extra_starts;
};

struct QmfResult {
  double energy = 0;     ///< bare <H>
  double objective = 0;  ///< <H> + penalty_weight <S^2>
  BlochConfig config;
  bool constrained = false;
  double penalty_weight = 0;
  std::optional<double> spin_expectation;
  std::optional<double> number_expectation;
  bool converged = false;
  int restarts_used = 0;
  int best_start = 0;
  double grad_norm = 0;  ///< max-norm of the objective gradient at config
};

/// Local minimization of <objective> from `start` (no restarts).
QmfResult minimize_coherent_local(const PauliSum& objective,
                                  const BlochConfig& start,
                                  const QmfOptions& opts = {});

/// Multi-start minimization of <objective> over product states; the lowest
/// objective wins, ties going to the earlier start.
QmfResult minimize_coherent(const PauliSum& objective,
                            const QmfOptions& opts = {});

QmfResult qmf_minimize(const ProblemInstance& problem,
                       const QmfOptions& opts = {});

/// Minimizes <H> + penalty_weight <S^2>. Throws InputError if the problem
/// has no spin2 operator.
QmfResult qmf_minimize_constrained(const ProblemInstance& problem,
                                   double penalty_weight = kDefaultPenalty,
                                   const QmfOptions& opts = {});

/// Fills energy / spin / number expectations of `r` from `problem`.
void annotate_qmf(const ProblemInstance& problem, QmfResult& r);

}  // namespace qcc
