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

#include "qcc/simstate.hpp"

#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>

namespace qcc {

namespace {

constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_cap(int n, int cap) {
  if (n > cap) {
    throw std::invalid_argument("dense oracle limited to " +
                                std::to_string(cap) + " qubits, got " +
                                std::to_string(n));
  }
}

// w|k> = value(k) |k ^ x>, with value(k) = phase * i^{#Y} * (-1)^{|k & z|}.
struct WordAction {
  std::uint64_t x;
  std::uint64_t z;
  cplx base;

  explicit WordAction(const PauliWord& w)
      : x(w.x_mask()),
        z(w.z_mask()),
        base(kIPow[(w.phase_exponent() + std::popcount(w.x_mask() & w.z_mask())) &
                   3]) {}

  cplx value(std::uint64_t k) const {
    return (std::popcount(k & z) & 1) ? -base : base;
  }
};

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  check_cap(n_qubits, kDenseQubitCap);
  amps_ = Amplitudes::Zero(Eigen::Index{1} << n_qubits);
  amps_(0) = 1.0;
}

StateVector::StateVector(int n_qubits, Amplitudes amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {
  check_cap(n_qubits, kDenseQubitCap);
  if (amps_.size() != (Eigen::Index{1} << n_qubits)) {
    throw std::invalid_argument("amplitude vector length is not 2^n");
  }
  const double norm = amps_.norm();
  if (norm == 0) throw std::invalid_argument("zero state vector");
  amps_ /= norm;
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  s.amps_(0) = 0;
  s.amps_(static_cast<Eigen::Index>(index)) = 1;
  return s;
}

DenseMatrix to_matrix(const PauliSum& h, int cap) {
  check_cap(h.n_qubits(), cap);
  const std::uint64_t dim = std::uint64_t{1} << h.n_qubits();
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  for (const auto& [key, c] : h) {
    const WordAction act(h.word(key));
    for (std::uint64_t k = 0; k < dim; ++k) {
      m(k ^ act.x, k) += c * act.value(k);
    }
  }
  return m;
}

DenseMatrix to_matrix(const PauliWord& w, int cap) {
  PauliSum s(w.n_qubits());
  s.add(w);
  return to_matrix(s, cap);
}

SpectrumResult exact_ground(const PauliSum& h, bool want_vector, int cap) {
  if (!h.is_hermitian()) {
    throw std::invalid_argument("exact_ground needs a Hermitian PauliSum");
  }
  const DenseMatrix m = to_matrix(h, cap);
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(
      m, want_vector ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigensolve failed");
  }
  SpectrumResult out;
  out.eigenvalues = es.eigenvalues();
  out.ground_energy = out.eigenvalues(0);
  if (want_vector) {
    out.ground_vector = StateVector(h.n_qubits(), es.eigenvectors().col(0));
  }
  return out;
}

Amplitudes apply_pauli_amps(const Amplitudes& in, const PauliWord& w) {
  const WordAction act(w);
  Amplitudes out(in.size());
  for (Eigen::Index k = 0; k < in.size(); ++k) {
    out(static_cast<Eigen::Index>(k ^ act.x)) = act.value(k) * in(k);
  }
  return out;
}

StateVector apply_pauli(const StateVector& s, const PauliWord& w) {
  return StateVector(s.n_qubits(), apply_pauli_amps(s.amplitudes(), w),
                     StateVector::Unchecked{});
}

Amplitudes apply_sum(const PauliSum& h, const Amplitudes& amps) {
  Amplitudes out = Amplitudes::Zero(amps.size());
  for (const auto& [key, c] : h) {
    const WordAction act(h.word(key));
    for (Eigen::Index k = 0; k < amps.size(); ++k) {
      out(static_cast<Eigen::Index>(k ^ act.x)) += c * act.value(k) * amps(k);
    }
  }
  return out;
}

Amplitudes apply_pauli_exp_amps(const Amplitudes& in, const PauliWord& p,
                                double tau) {
  if (p.phase_exponent() != 0) {
    throw std::invalid_argument("entangler generator must have phase +1");
  }
  const WordAction act(p);
  const cplx c = std::cos(tau / 2);
  const cplx ms = cplx(0, -std::sin(tau / 2));
  Amplitudes out(in.size());
  for (Eigen::Index k = 0; k < in.size(); ++k) {
    const auto src = static_cast<Eigen::Index>(k ^ act.x);
    // (p s)(k) = value(src) * s(src), since p maps |src> to |k>.
    out(k) = c * in(k) + ms * act.value(src) * in(src);
  }
  return out;
}

StateVector apply_pauli_exp(const StateVector& s, const PauliWord& p,
                            double tau) {
  return StateVector(s.n_qubits(), apply_pauli_exp_amps(s.amplitudes(), p, tau),
                     StateVector::Unchecked{});
}

cplx expectation_complex(const StateVector& s, const PauliSum& h) {
  return s.amplitudes().dot(apply_sum(h, s.amplitudes()));
}

double expectation(const StateVector& s, const PauliSum& h) {
  if (!h.is_hermitian()) {
    throw std::invalid_argument("expectation needs a Hermitian PauliSum");
  }
  const cplx e = expectation_complex(s, h);
  if (std::abs(e.imag()) > 1e-10) {
    throw std::logic_error("imaginary residue in Hermitian expectation");
  }
  return e.real();
}

}  // namespace qcc
