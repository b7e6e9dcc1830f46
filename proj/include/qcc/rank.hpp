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

// Entangler screening around a mean-field reference |Omega>.
//
// With E(tau, Omega) = <Omega| H[tau; P] |Omega> and G = -(i/2)[H, P]:
//   d1 = dE/dtau at 0                 = <G>
//   d2 = d^2/dtau^2 min_Omega E       = <(1/2) P [H, P]> - c^T D^+ c,
// where c_i = d<G>/d(angle_i) and D is the angle Hessian of the reference
// objective. Tier1: |d1| > grad_tol. Tier2: |d1| <= grad_tol and
// d2 < -curv_tol. Everything else is discarded.

#pragma once

#include <Eigen/Dense>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qcc/hamio.hpp"
#include "qcc/meanfield.hpp"
#include "qcc/pauli.hpp"

namespace qcc {

struct RankOptions {
  double grad_tol = 1e-6;
  double curv_tol = 1e-6;
  double disc_tol = 1e-4;
  double pole_tol = 1e-6;
  double probe_tau = 1e-3;     ///< amplitude for pole and discontinuity probes
  double pinv_cutoff = 1e-10;  ///< eigenvalue cutoff of D^+
  int top_k = 20;              ///< delta_e finalists per tier
  bool constrained = false;    ///< spin-constrained QMF reference
  double penalty = kDefaultPenalty;
  QmfOptions qmf;
  int jobs = 1;
  /// Initial amplitudes of the local delta_e minimizations.
  std::vector<double> delta_e_starts = {
      0.0,
      std::numbers::pi / 4,
      -std::numbers::pi / 4,
      std::numbers::pi / 2,
      -std::numbers::pi / 2,
      3 * std::numbers::pi / 4,
      -3 * std::numbers::pi / 4,
      std::numbers::pi};
};

enum class Tier { Tier1, Tier2, Discarded };

std::string tier_name(Tier t);

struct EntanglerScore {
  PauliWord generator;
  double first_derivative = 0;
  std::optional<double> second_derivative;
  std::optional<double> delta_e;
  std::optional<double> delta_e_tau;  ///< minimizing amplitude
  Tier tier = Tier::Discarded;
  bool discontinuity_flag = false;
  bool constrained_reference = false;
  bool pole_resolved = false;
  bool delta_e_converged = true;
};

struct RelaxationData {
  Eigen::VectorXd c_vector;  ///< 2 N_q
  Eigen::MatrixXd d_matrix;  ///< 2 N_q x 2 N_q
  int pseudo_inverse_rank = 0;
};

struct DiscontinuityResult {
  bool discontinuous = false;
  double d_zero = 0;   ///< first derivative at the reference
  double d_plus = 0;   ///< at the re-optimized QMF of H[+probe]
  double d_minus = 0;  ///< at the re-optimized QMF of H[-probe]
  /// |d_plus + d_minus - 2 d_zero| / 2; a smooth envelope gives O(probe^2).
  double measure = 0;
};

struct DeltaEResult {
  double delta_e = 0;
  double tau = 0;
  BlochConfig config;
  bool converged = false;
};

struct RankReport {
  QmfResult reference;
  std::vector<EntanglerScore> scores;
  RankOptions options;
};

/// The objective whose minimum `qmf` is: H, or H + penalty S^2 when
/// qmf.constrained.
PauliSum reference_objective(const ProblemInstance& problem,
                             const QmfResult& qmf);

/// <Omega| -(i/2)[H, P] |Omega>; H only, also for a constrained reference.
double first_derivative(const ProblemInstance& problem,
                        const PauliWord& generator, const QmfResult& qmf);

/// c from G = -(i/2)[H, P]; D from the reference objective; both from
/// transition elements between explicitly differentiated product states.
RelaxationData relaxation_data(const ProblemInstance& problem,
                               const PauliWord& generator, const QmfResult& qmf,
                               const RankOptions& opts = {});

/// Pins the azimuthal angle of every qubit sitting on a pole (theta within
/// pole_tol of 0 or pi) from a re-optimization on H[probe_tau; P], polished
/// on the tau -> 0 limit (minimum of the relaxed curvature over the pole
/// azimuths). Pole thetas are snapped onto the pole; other angles are
/// untouched. Returns the input unchanged when no qubit is on a pole.
QmfResult resolve_degenerate_angles(const ProblemInstance& problem,
                                    const PauliWord& generator,
                                    const QmfResult& qmf,
                                    const RankOptions& opts = {});

DiscontinuityResult discontinuity_test(const ProblemInstance& problem,
                                       const PauliWord& generator,
                                       const QmfResult& qmf,
                                       const RankOptions& opts = {});

/// <(1/2) P[H, P]> - c^T D^+ c at the pole-resolved reference; nullopt when
/// the discontinuity test fires.
std::optional<double> second_derivative(const ProblemInstance& problem,
                                        const PauliWord& generator,
                                        const QmfResult& qmf,
                                        const RankOptions& opts = {});

/// The same value without the discontinuity test, at the given reference.
double second_derivative_unchecked(const ProblemInstance& problem,
                                   const PauliWord& generator,
                                   const QmfResult& qmf,
                                   const RankOptions& opts = {});

/// min over (tau, Omega) of <Omega| H[tau; P] |Omega> minus the bare
/// reference energy, from local minimizations started at the reference
/// angles with each amplitude in opts.delta_e_starts.
DeltaEResult delta_e(const ProblemInstance& problem, const PauliWord& generator,
                     const QmfResult& reference, const RankOptions& opts = {});

/// First/second derivatives and tier for one generator.
EntanglerScore score_entangler(const ProblemInstance& problem,
                               const PauliWord& generator,
                               const QmfResult& reference,
                               const RankOptions& opts = {});

/// Scores the pool, evaluates delta_e for the top_k of each tier and sorts by
/// tier, then delta_e (finalists first), then |d1| or |d2| descending, then
/// generator order.
RankReport screen(const ProblemInstance& problem,
                  const std::vector<PauliWord>& pool,
                  const RankOptions& opts = {});

/// Same, against a precomputed reference.
RankReport screen(const ProblemInstance& problem,
                  const std::vector<PauliWord>& pool,
                  const QmfResult& reference, const RankOptions& opts);

/// Columns: generator,tier,d1,d2,delta_e,flags.
std::string format_rank_csv(const RankReport& report);

/// Orders words as enumerate_entanglers does (I < X < Y < Z, highest qubit
/// first).
bool generator_less(const PauliWord& a, const PauliWord& b);

}  // namespace qcc
