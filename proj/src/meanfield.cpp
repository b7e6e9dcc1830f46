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

#include "qcc/meanfield.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>

#include "qcc/optim.hpp"
#include "qcc/parallel.hpp"

namespace qcc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFieldStartOffset = 0.05;

// Expectations of x, y, z on each qubit and their theta / phi derivatives.
struct QubitMoments {
  std::vector<std::array<double, 3>> value, d_theta, d_phi;

  explicit QubitMoments(const BlochConfig& omega) {
    const int n = omega.n_qubits();
    value.resize(n);
    d_theta.resize(n);
    d_phi.resize(n);
    for (int q = 0; q < n; ++q) {
      const double st = std::sin(omega[q].theta), ct = std::cos(omega[q].theta);
      const double sp = std::sin(omega[q].phi), cp = std::cos(omega[q].phi);
      value[q] = {st * cp, st * sp, ct};
      d_theta[q] = {ct * cp, ct * sp, -st};
      d_phi[q] = {-st * sp, st * cp, 0.0};
    }
  }
};

int axis_index(const WordKey& k, int q) {
  const bool x = (k.x >> q) & 1, z = (k.z >> q) & 1;
  return x ? (z ? 1 : 0) : 2;
}

double wrap_two_pi(double a) {
  a = std::fmod(a, 2 * kPi);
  if (a < 0) a += 2 * kPi;
  return a >= 2 * kPi ? 0.0 : a;
}

BlochConfig field_guided_start(const PauliSum& objective) {
  const int n = objective.n_qubits();
  BlochConfig start(n);
  for (int q = 0; q < n; ++q) {
    PauliWord zq(n);
    zq.set(q, Axis::Z);
    const double field = objective.coefficient(zq).real();
    // A positive Z coefficient favours <z> = -1, i.e. theta = pi.
    start[q].theta = field > 0   ? kPi - kFieldStartOffset
                     : field < 0 ? kFieldStartOffset
                                 : kPi / 2;
    start[q].phi = 0;
  }
  return start;
}

}  // namespace

BlochConfig BlochConfig::from_flat(const Eigen::VectorXd& flat) {
  BlochConfig c(static_cast<int>(flat.size() / 2));
  for (int q = 0; q < c.n_qubits(); ++q) {
    c[q] = {flat(2 * q), flat(2 * q + 1)};
  }
  return c;
}

Eigen::VectorXd BlochConfig::flat() const {
  Eigen::VectorXd v(2 * angles_.size());
  for (std::size_t q = 0; q < angles_.size(); ++q) {
    v(2 * q) = angles_[q].theta;
    v(2 * q + 1) = angles_[q].phi;
  }
  return v;
}

BlochConfig& BlochConfig::normalize() {
  for (auto& a : angles_) {
    double t = wrap_two_pi(a.theta);
    double p = a.phi;
    if (t > kPi) {
      // (2 pi - theta, phi + pi) is the same state times -1.
      t = 2 * kPi - t;
      p += kPi;
    }
    a.theta = t;
    a.phi = wrap_two_pi(p);
  }
  return *this;
}

std::array<cplx, 2> BlochConfig::spinor(int q) const {
  const auto& a = angles_[q];
  return {cplx(std::cos(a.theta / 2), 0),
          std::polar(std::sin(a.theta / 2), a.phi)};
}

std::array<cplx, 2> spinor_derivative(const BlochAngles& angles, int d_theta,
                                      int d_phi) {
  // d^a/dtheta^a cos(theta/2) = 2^-a cos(theta/2 + a pi/2), likewise for sin.
  const double scale = std::ldexp(1.0, -d_theta);
  const double half = angles.theta / 2 + d_theta * kPi / 2;
  cplx phase = std::polar(1.0, angles.phi);
  for (int b = 0; b < d_phi; ++b) phase *= cplx(0, 1);
  return {d_phi == 0 ? cplx(scale * std::cos(half), 0) : cplx(0, 0),
          scale * std::sin(half) * phase};
}

StateVector product_state(const BlochConfig& omega) {
  const int n = omega.n_qubits();
  Amplitudes amps = Amplitudes::Ones(Eigen::Index{1} << n);
  for (int q = 0; q < n; ++q) {
    const auto s = omega.spinor(q);
    for (Eigen::Index k = 0; k < amps.size(); ++k) amps(k) *= s[(k >> q) & 1];
  }
  return StateVector(n, std::move(amps));
}

cplx coherent_expectation_complex(const PauliSum& h, const BlochConfig& omega) {
  if (h.n_qubits() != omega.n_qubits()) {
    throw std::invalid_argument("Bloch configuration size mismatch");
  }
  const QubitMoments m(omega);
  cplx total = 0;
  for (const auto& [key, c] : h) {
    double prod = 1;
    for (std::uint64_t s = key.x | key.z; s; s &= s - 1) {
      const int q = std::countr_zero(s);
      prod *= m.value[q][axis_index(key, q)];
    }
    total += c * prod;
  }
  return total;
}

double coherent_expectation(const PauliSum& h, const BlochConfig& omega) {
  return coherent_expectation_complex(h, omega).real();
}

Eigen::VectorXd angle_gradient(const PauliSum& h, const BlochConfig& omega) {
  Eigen::VectorXd grad;
  coherent_energy_and_gradient(h, omega.flat(), grad);
  return grad;
}

double coherent_energy_and_gradient(const PauliSum& h,
                                    const Eigen::VectorXd& flat,
                                    Eigen::VectorXd& grad) {
  const BlochConfig omega = BlochConfig::from_flat(flat);
  if (h.n_qubits() != omega.n_qubits()) {
    throw std::invalid_argument("Bloch configuration size mismatch");
  }
  const QubitMoments m(omega);
  grad = Eigen::VectorXd::Zero(flat.size());
  double energy = 0;
  int qs[kMaxQubits];
  double vals[kMaxQubits];
  for (const auto& [key, c] : h) {
    const double coeff = c.real();
    int len = 0;
    for (std::uint64_t s = key.x | key.z; s; s &= s - 1) {
      const int q = std::countr_zero(s);
      qs[len] = q;
      vals[len++] = m.value[q][axis_index(key, q)];
    }
    double prod = 1;
    for (int j = 0; j < len; ++j) prod *= vals[j];
    energy += coeff * prod;
    for (int j = 0; j < len; ++j) {
      double others = coeff;
      for (int i = 0; i < len; ++i) {
        if (i != j) others *= vals[i];
      }
      const int q = qs[j], a = axis_index(key, q);
      grad(2 * q) += others * m.d_theta[q][a];
      grad(2 * q + 1) += others * m.d_phi[q][a];
    }
  }
  return energy;
}

QmfResult minimize_coherent_local(const PauliSum& objective,
                                  const BlochConfig& start,
                                  const QmfOptions& opts) {
  const Objective f = [&objective](const Eigen::VectorXd& x,
                                   Eigen::VectorXd& g) {
    return coherent_energy_and_gradient(objective, x, g);
  };
  BfgsOptions bo;
  bo.grad_tol = opts.grad_tol;
  bo.energy_tol = opts.energy_tol;
  bo.max_iter = opts.max_iter;
  const BfgsResult r = minimize_bfgs(f, start.flat(), bo);
  QmfResult out;
  out.config = BlochConfig::from_flat(r.x).normalize();
  out.objective = r.value;
  out.energy = r.value;
  out.converged = r.converged;
  out.grad_norm = r.grad_norm;
  out.restarts_used = 1;
  return out;
}

QmfResult minimize_coherent(const PauliSum& objective, const QmfOptions& opts) {
  const int n = objective.n_qubits();
  std::vector<BlochConfig> starts;
  starts.push_back(field_guided_start(objective));
  for (const auto& s : opts.extra_starts) {
    if (s.n_qubits() != n) {
      throw std::invalid_argument("extra start has the wrong qubit count");
    }
    starts.push_back(s);
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int r = 1; r < opts.restarts; ++r) {
    BlochConfig c(n);
    for (int q = 0; q < n; ++q) {
      c[q].theta = kPi * unit(rng);
      c[q].phi = 2 * kPi * unit(rng);
    }
    starts.push_back(std::move(c));
  }

  std::vector<QmfResult> runs(starts.size());
  parallel_for(starts.size(), opts.jobs, [&](std::size_t i) {
    runs[i] = minimize_coherent_local(objective, starts[i], opts);
  });

  std::size_t best = 0;
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (runs[i].objective < runs[best].objective - 1e-12) best = i;
  }
  QmfResult out = runs[best];
  out.restarts_used = static_cast<int>(runs.size());
  out.best_start = static_cast<int>(best);
  return out;
}

void annotate_qmf(const ProblemInstance& problem, QmfResult& r) {
  r.energy = coherent_expectation(problem.hamiltonian, r.config);
  if (problem.spin_sq_op) {
    r.spin_expectation = coherent_expectation(*problem.spin_sq_op, r.config);
  }
  if (problem.number_op) {
    r.number_expectation = coherent_expectation(*problem.number_op, r.config);
  }
}

QmfResult qmf_minimize(const ProblemInstance& problem, const QmfOptions& opts) {
  QmfResult r = minimize_coherent(problem.hamiltonian, opts);
  annotate_qmf(problem, r);
  return r;
}

QmfResult qmf_minimize_constrained(const ProblemInstance& problem,
                                   double penalty_weight,
                                   const QmfOptions& opts) {
  if (!problem.spin_sq_op) {
    throw InputError("spin-constrained QMF needs an 'operator spin2' block");
  }
  PauliSum objective = problem.hamiltonian;
  objective.add(*problem.spin_sq_op, penalty_weight);
  QmfResult r = minimize_coherent(objective, opts);
  r.constrained = true;
  r.penalty_weight = penalty_weight;
  annotate_qmf(problem, r);
  return r;
}

}  // namespace qcc
