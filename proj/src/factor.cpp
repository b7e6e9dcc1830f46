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

#include "qcc/factor.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qcc {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4;

void check_word(const PauliWord& p, int min_len) {
  if (p.phase_exponent() != 0) {
    throw std::invalid_argument("factorization needs a phase-(+1) word");
  }
  if (p.length() < min_len) {
    throw std::invalid_argument("word too short to factorize: " +
                                p.to_string());
  }
}

// (w', w'') with [w', w''] = 2i w.
std::pair<Axis, Axis> pair_for(Axis w) {
  switch (w) {
    case Axis::X:
      return {Axis::Y, Axis::Z};
    case Axis::Y:
      return {Axis::Z, Axis::X};
    case Axis::Z:
      return {Axis::X, Axis::Y};
  }
  throw std::logic_error("bad axis");
}

void expand(const PauliWord& g, FactorKind kind, std::vector<Factor>& out) {
  if (g.length() <= 2) {
    out.push_back({g, kind});
    return;
  }
  const auto [b, a] = split_once(g);
  expand(a, FactorKind::FixedPlus, out);
  expand(b, kind, out);
  expand(a, FactorKind::FixedMinus, out);
}

// Amplitude tau of exp(-i tau G / 2) realizing each kind.
double rotation_angle(FactorKind kind, double t) {
  switch (kind) {
    case FactorKind::Variable:
      return 2 * t;
    case FactorKind::FixedPlus:
      return -2 * kQuarterPi;
    case FactorKind::FixedMinus:
      return 2 * kQuarterPi;
  }
  throw std::logic_error("bad factor kind");
}

}  // namespace

std::size_t FactorizedExp::two_qubit_count() const {
  return static_cast<std::size_t>(
      std::count_if(factors.begin(), factors.end(),
                    [](const Factor& f) { return f.generator.length() == 2; }));
}

std::size_t FactorizedExp::variable_count() const {
  return static_cast<std::size_t>(
      std::count_if(factors.begin(), factors.end(), [](const Factor& f) {
        return f.kind == FactorKind::Variable;
      }));
}

std::pair<PauliWord, PauliWord> split_once(const PauliWord& p) {
  check_word(p, 3);
  const std::vector<int> support = p.qubits();  // ascending
  const int k = support[(support.size() - 1) / 2];
  const auto [w1, w2] = pair_for(*p.axis(k));
  PauliWord upper(p.n_qubits()), lower(p.n_qubits());
  for (int q : support) {
    if (q > k) upper.set(q, p.axis(q));
    if (q < k) lower.set(q, p.axis(q));
  }
  upper.set(k, w1);
  lower.set(k, w2);
  return {upper, lower};
}

FactorizedExp factorize(const PauliWord& p) {
  check_word(p, 2);
  FactorizedExp f{p, {}};
  expand(p, FactorKind::Variable, f.factors);
  return f;
}

StateVector apply_factorized(const StateVector& s, const FactorizedExp& f,
                             double t) {
  StateVector out = s;
  for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) {
    out = apply_pauli_exp(out, it->generator, rotation_angle(it->kind, t));
  }
  return out;
}

DenseMatrix factorized_matrix(const FactorizedExp& f, double t) {
  const int n = f.word.n_qubits();
  const Eigen::Index dim = Eigen::Index{1} << n;
  DenseMatrix m(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    m.col(c) = apply_factorized(StateVector::basis(n, c), f, t).amplitudes();
  }
  return m;
}

std::string format_factorization(const FactorizedExp& f) {
  std::ostringstream os;
  for (const auto& factor : f.factors) {
    switch (factor.kind) {
      case FactorKind::Variable:
        os << "EXP(-i*t) ";
        break;
      case FactorKind::FixedPlus:
        os << "EXP(+i*pi/4) ";
        break;
      case FactorKind::FixedMinus:
        os << "EXP(-i*pi/4) ";
        break;
    }
    os << factor.generator.to_string() << '\n';
  }
  os << "# " << f.word.to_string() << ": " << f.factors.size()
     << " factors, " << f.two_qubit_count() << " two-qubit\n";
  return os.str();
}

}  // namespace qcc
