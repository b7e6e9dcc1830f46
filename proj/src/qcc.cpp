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

#include "qcc/qcc.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qcc/optim.hpp"
#include "qcc/parallel.hpp"

namespace qcc {

namespace {

constexpr cplx kMinusHalfI{0, -0.5};

void check_generator(const PauliWord& p, int n_qubits) {
  if (p.n_qubits() != n_qubits) {
    throw std::invalid_argument("entangler qubit count mismatch");
  }
  if (p.phase_exponent() != 0) {
    throw std::invalid_argument("entangler generator must have phase +1");
  }
  if (p.length() < 2) {
    throw std::invalid_argument("entangler generator must act on >= 2 qubits: " +
                                p.to_string());
  }
}

// All intermediates H_0 = h, H_k = T_k(H_{k-1}); empty if any exceeds the
// threshold.
std::vector<PauliSum> transform_chain(const PauliSum& h,
                                      const std::vector<PauliWord>& gens,
                                      const Eigen::VectorXd& tau,
                                      std::size_t max_terms) {
  std::vector<PauliSum> chain;
  chain.reserve(gens.size() + 1);
  chain.push_back(h);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    chain.push_back(similarity_transform(chain.back(), gens[k], tau(k)));
    if (chain.back().size() > max_terms) return {};
  }
  return chain;
}

// The product state with qubit q's spinor replaced by its derivative.
Amplitudes product_amplitudes(const BlochConfig& omega, int dq, int d_theta,
                              int d_phi) {
  const int n = omega.n_qubits();
  Amplitudes amps = Amplitudes::Ones(Eigen::Index{1} << n);
  for (int q = 0; q < n; ++q) {
    const auto s = q == dq ? spinor_derivative(omega[q], d_theta, d_phi)
                           : omega.spinor(q);
    for (Eigen::Index k = 0; k < amps.size(); ++k) amps(k) *= s[(k >> q) & 1];
  }
  return amps;
}

double transform_energy_and_gradient(const std::vector<PauliSum>& chain,
                                     const std::vector<PauliWord>& gens,
                                     const Eigen::VectorXd& tau,
                                     const Eigen::VectorXd& angles,
                                     Eigen::VectorXd& grad) {
  const std::size_t n_ent = gens.size();
  const BlochConfig omega = BlochConfig::from_flat(angles);
  Eigen::VectorXd g_angles;
  const double energy =
      coherent_energy_and_gradient(chain.back(), angles, g_angles);
  grad.resize(angles.size() + static_cast<Eigen::Index>(n_ent));
  grad.head(angles.size()) = g_angles;
  for (std::size_t k = 0; k < n_ent; ++k) {
    // dH_k/dtau_k = -(i/2)[H_k, P_k], then dressed by the inner entanglers.
    PauliSum g = sum_commutator(chain[k + 1], gens[k]) * kMinusHalfI;
    for (std::size_t j = k + 1; j < n_ent; ++j) {
      g = similarity_transform(g, gens[j], tau(j));
    }
    grad(angles.size() + static_cast<Eigen::Index>(k)) =
        coherent_expectation(g, omega);
  }
  return energy;
}

// Adjoint-state gradient on the explicit statevector.
double statevector_energy_and_gradient(const PauliSum& h,
                                       const std::vector<PauliWord>& gens,
                                       const Eigen::VectorXd& tau,
                                       const Eigen::VectorXd& angles,
                                       Eigen::VectorXd& grad) {
  const std::size_t n_ent = gens.size();
  const BlochConfig omega = BlochConfig::from_flat(angles);
  const int n = omega.n_qubits();
  Amplitudes psi = product_amplitudes(omega, -1, 0, 0);
  for (std::size_t k = n_ent; k-- > 0;) {
    psi = apply_pauli_exp_amps(psi, gens[k], tau(k));
  }
  Amplitudes lambda = apply_sum(h, psi);
  const double energy = psi.dot(lambda).real();

  grad.resize(2 * n + static_cast<Eigen::Index>(n_ent));
  for (std::size_t k = 0; k < n_ent; ++k) {
    grad(2 * n + static_cast<Eigen::Index>(k)) =
        lambda.dot(apply_pauli_amps(psi, gens[k])).imag();
    psi = apply_pauli_exp_amps(psi, gens[k], -tau(k));
    lambda = apply_pauli_exp_amps(lambda, gens[k], -tau(k));
  }
  // lambda is now U^dag H U |Omega>.
  for (int q = 0; q < n; ++q) {
    grad(2 * q) = 2 * product_amplitudes(omega, q, 1, 0).dot(lambda).real();
    grad(2 * q + 1) = 2 * product_amplitudes(omega, q, 0, 1).dot(lambda).real();
  }
  return energy;
}

Eigen::VectorXd joint_params(const EntanglerSet& ents,
                             const BlochConfig& omega) {
  Eigen::VectorXd x(2 * omega.n_qubits() + static_cast<Eigen::Index>(ents.size()));
  x << omega.flat(), ents.amplitudes();
  return x;
}

void check_sizes(const PauliSum& h, const EntanglerSet& ents,
                 const BlochConfig& omega) {
  if (h.n_qubits() != omega.n_qubits() ||
      (!ents.empty() && ents.n_qubits() != h.n_qubits())) {
    throw std::invalid_argument("QCC qubit count mismatch");
  }
}

}  // namespace

EntanglerSet::EntanglerSet(int n_qubits,
                           const std::vector<PauliWord>& generators,
                           const std::vector<double>& amplitudes)
    : n_qubits_(n_qubits) {
  if (!amplitudes.empty() && amplitudes.size() != generators.size()) {
    throw std::invalid_argument("amplitude count does not match generators");
  }
  for (std::size_t k = 0; k < generators.size(); ++k) {
    add(generators[k], amplitudes.empty() ? 0.0 : amplitudes[k]);
  }
}

EntanglerSet& EntanglerSet::add(const PauliWord& generator, double amplitude) {
  check_generator(generator, n_qubits_);
  entries_.push_back({generator, amplitude});
  return *this;
}

std::vector<PauliWord> EntanglerSet::generators() const {
  std::vector<PauliWord> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.generator);
  return out;
}

Eigen::VectorXd EntanglerSet::amplitudes() const {
  Eigen::VectorXd tau(static_cast<Eigen::Index>(entries_.size()));
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    tau(static_cast<Eigen::Index>(k)) = entries_[k].amplitude;
  }
  return tau;
}

void EntanglerSet::set_amplitudes(const Eigen::VectorXd& tau) {
  if (static_cast<std::size_t>(tau.size()) != entries_.size()) {
    throw std::invalid_argument("amplitude count does not match entanglers");
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k].amplitude = tau(static_cast<Eigen::Index>(k));
  }
}

std::optional<PauliSum> dressed_hamiltonian(const PauliSum& h,
                                            const EntanglerSet& ents,
                                            std::size_t max_terms) {
  auto chain = transform_chain(h, ents.generators(), ents.amplitudes(),
                               max_terms);
  if (chain.empty()) return std::nullopt;
  return std::move(chain.back());
}

StateVector qcc_state(const EntanglerSet& ents, const BlochConfig& omega) {
  StateVector s = product_state(omega);
  for (std::size_t k = ents.size(); k-- > 0;) {
    s = apply_pauli_exp(s, ents[k].generator, ents[k].amplitude);
  }
  return s;
}

double qcc_energy(const PauliSum& h, const EntanglerSet& ents,
                  const BlochConfig& omega, EnergyPath path) {
  check_sizes(h, ents, omega);
  if (path != EnergyPath::Statevector) {
    const std::size_t cap = path == EnergyPath::Transform
                                ? std::numeric_limits<std::size_t>::max()
                                : kStatevectorThreshold;
    if (auto dressed = dressed_hamiltonian(h, ents, cap)) {
      return coherent_expectation(*dressed, omega);
    }
  }
  return expectation_complex(qcc_state(ents, omega), h).real();
}

double qcc_energy(const ProblemInstance& problem, const EntanglerSet& ents,
                  const BlochConfig& omega, EnergyPath path) {
  return qcc_energy(problem.hamiltonian, ents, omega, path);
}

Eigen::VectorXd amplitude_gradient(const PauliSum& h, const EntanglerSet& ents,
                                   const BlochConfig& omega, EnergyPath path) {
  check_sizes(h, ents, omega);
  Eigen::VectorXd grad;
  qcc_energy_and_gradient(h, ents.generators(), joint_params(ents, omega), grad,
                          path);
  return grad.tail(static_cast<Eigen::Index>(ents.size()));
}

Eigen::VectorXd amplitude_gradient(const ProblemInstance& problem,
                                   const EntanglerSet& ents,
                                   const BlochConfig& omega, EnergyPath path) {
  return amplitude_gradient(problem.hamiltonian, ents, omega, path);
}

double qcc_energy_and_gradient(const PauliSum& h,
                               const std::vector<PauliWord>& generators,
                               const Eigen::VectorXd& params,
                               Eigen::VectorXd& grad, EnergyPath path,
                               std::size_t threshold) {
  const Eigen::Index n_ang = 2 * h.n_qubits();
  if (params.size() != n_ang + static_cast<Eigen::Index>(generators.size())) {
    throw std::invalid_argument("QCC parameter vector has the wrong length");
  }
  const Eigen::VectorXd angles = params.head(n_ang);
  const Eigen::VectorXd tau = params.tail(params.size() - n_ang);
  if (path != EnergyPath::Statevector) {
    const std::size_t cap = path == EnergyPath::Transform
                                ? std::numeric_limits<std::size_t>::max()
                                : threshold;
    const auto chain = transform_chain(h, generators, tau, cap);
    if (!chain.empty()) {
      return transform_energy_and_gradient(chain, generators, tau, angles,
                                           grad);
    }
  }
  return statevector_energy_and_gradient(h, generators, tau, angles, grad);
}

QccResult qcc_minimize_from(const ProblemInstance& problem,
                            const EntanglerSet& start, const BlochConfig& omega,
                            const QccOptions& opts) {
  check_sizes(problem.hamiltonian, start, omega);
  const auto gens = start.generators();
  const Objective f = [&](const Eigen::VectorXd& x, Eigen::VectorXd& g) {
    return qcc_energy_and_gradient(problem.hamiltonian, gens, x, g, opts.path,
                                   opts.statevector_threshold);
  };
  BfgsOptions bo;
  bo.grad_tol = opts.qmf.grad_tol;
  bo.energy_tol = opts.qmf.energy_tol;
  bo.max_iter = opts.qmf.max_iter;
  bo.record_history = opts.record_history;
  const BfgsResult r = minimize_bfgs(f, joint_params(start, omega), bo);

  const Eigen::Index n_ang = 2 * problem.n_qubits;
  QccResult out;
  out.energy = r.value;
  out.config = BlochConfig::from_flat(r.x.head(n_ang)).normalize();
  out.amplitudes = r.x.tail(r.x.size() - n_ang);
  out.entanglers = start;
  out.entanglers.set_amplitudes(out.amplitudes);
  out.converged = r.converged;
  out.grad_norm = r.grad_norm;
  out.parameter_count = out.entanglers.parameter_count();
  out.history = r.history;
  if (problem.spin_sq_op || problem.number_op) {
    const StateVector s = qcc_state(out.entanglers, out.config);
    if (problem.spin_sq_op) {
      out.spin_expectation = expectation_complex(s, *problem.spin_sq_op).real();
    }
    if (problem.number_op) {
      out.number_expectation = expectation_complex(s, *problem.number_op).real();
    }
  }
  return out;
}

QccResult qcc_minimize(const ProblemInstance& problem,
                       const std::vector<PauliWord>& generators,
                       const QccOptions& opts) {
  const int n = problem.n_qubits;
  const EntanglerSet zero(n, generators);
  const QmfResult qmf = qmf_minimize(problem, opts.qmf);

  if (generators.empty()) {
    QccResult out;
    out.energy = qmf.energy;
    out.amplitudes = Eigen::VectorXd(0);
    out.config = qmf.config;
    out.entanglers = zero;
    out.spin_expectation = qmf.spin_expectation;
    out.number_expectation = qmf.number_expectation;
    out.converged = qmf.converged;
    out.grad_norm = qmf.grad_norm;
    out.parameter_count = zero.parameter_count();
    out.qmf_energy = qmf.energy;
    out.history = {qmf.energy};
    return out;
  }

  struct Start {
    EntanglerSet ents;
    BlochConfig omega;
  };
  std::vector<Start> starts{{zero, qmf.config}};
  if (opts.constrained_seed && problem.spin_sq_op) {
    starts.push_back(
        {zero, qmf_minimize_constrained(problem, opts.penalty, opts.qmf).config});
  }
  std::mt19937_64 rng(opts.qmf.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int r = 0; r < opts.random_starts; ++r) {
    EntanglerSet ents = zero;
    Eigen::VectorXd tau(static_cast<Eigen::Index>(generators.size()));
    for (Eigen::Index k = 0; k < tau.size(); ++k) tau(k) = unit(rng) - 0.5;
    ents.set_amplitudes(tau);
    BlochConfig omega(n);
    for (int q = 0; q < n; ++q) {
      omega[q].theta = std::numbers::pi * unit(rng);
      omega[q].phi = 2 * std::numbers::pi * unit(rng);
    }
    starts.push_back({std::move(ents), std::move(omega)});
  }

  std::vector<QccResult> runs(starts.size());
  parallel_for(starts.size(), opts.jobs, [&](std::size_t i) {
    runs[i] = qcc_minimize_from(problem, starts[i].ents, starts[i].omega, opts);
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (runs[i].energy < runs[best].energy - 1e-12) best = i;
  }
  QccResult out = std::move(runs[best]);
  out.best_start = static_cast<int>(best);
  out.qmf_energy = qmf.energy;
  return out;
}

}  // namespace qcc
