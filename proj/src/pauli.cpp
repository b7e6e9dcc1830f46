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

#include "qcc/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <sstream>

namespace qcc {

namespace {

constexpr cplx kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_qubits(int n) {
  if (n <= 0 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count must be in [1, 64], got " +
                                std::to_string(n));
  }
}

void check_same_size(int a, int b) {
  if (a != b) {
    throw std::invalid_argument("qubit-count mismatch: " + std::to_string(a) +
                                " vs " + std::to_string(b));
  }
}

std::uint64_t qubit_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Phase exponent (power of i) picked up by the product of two phase-free
// words, summed over qubits: XY = iZ, YZ = iX, ZX = iY and the reverse
// orders give -i.
int product_phase(WordKey a, WordKey b) {
  const std::uint64_t ax = a.x & ~a.z, ay = a.x & a.z, az = ~a.x & a.z;
  const std::uint64_t bx = b.x & ~b.z, by = b.x & b.z, bz = ~b.x & b.z;
  const std::uint64_t pos = (ax & by) | (ay & bz) | (az & bx);
  const std::uint64_t neg = (ay & bx) | (az & by) | (ax & bz);
  return (std::popcount(pos) - std::popcount(neg)) & 3;
}

}  // namespace

char axis_letter(Axis a) {
  switch (a) {
    case Axis::X:
      return 'X';
    case Axis::Y:
      return 'Y';
    case Axis::Z:
      return 'Z';
  }
  return '?';
}

PauliWord::PauliWord(int n_qubits) : n_qubits_(n_qubits) {
  check_qubits(n_qubits);
}

PauliWord::PauliWord(int n_qubits, WordKey key, int phase_exponent)
    : n_qubits_(n_qubits), key_(key), phase_(phase_exponent & 3) {
  check_qubits(n_qubits);
  if ((key.x | key.z) & ~qubit_mask(n_qubits)) {
    throw std::invalid_argument("Pauli word touches a qubit >= " +
                                std::to_string(n_qubits));
  }
}

PauliWord PauliWord::parse(std::string_view text, int n_qubits) {
  PauliWord w(n_qubits);
  std::istringstream in{std::string(text)};
  std::string tok;
  bool saw_identity = false;
  bool saw_factor = false;
  while (in >> tok) {
    const char head =
        static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    if (tok.size() == 1 && head == 'I') {
      saw_identity = true;
      continue;
    }
    Axis a;
    switch (head) {
      case 'X':
        a = Axis::X;
        break;
      case 'Y':
        a = Axis::Y;
        break;
      case 'Z':
        a = Axis::Z;
        break;
      default:
        throw std::invalid_argument("bad Pauli factor '" + tok + "'");
    }
    const std::string digits = tok.substr(1);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](unsigned char c) { return std::isdigit(c); })) {
      throw std::invalid_argument("bad Pauli factor '" + tok + "'");
    }
    const int q = std::stoi(digits);
    if (q >= n_qubits) {
      throw std::invalid_argument("qubit index " + digits +
                                  " out of range for " +
                                  std::to_string(n_qubits) + " qubits");
    }
    if (w.axis(q)) {
      throw std::invalid_argument("qubit " + digits + " repeated in word");
    }
    w.set(q, a);
    saw_factor = true;
  }
  if (saw_identity && saw_factor) {
    throw std::invalid_argument("identity 'I' mixed with Pauli factors");
  }
  return w;
}

cplx PauliWord::phase() const { return kPhases[phase_]; }

int PauliWord::length() const { return std::popcount(support()); }

std::optional<Axis> PauliWord::axis(int qubit) const {
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const bool x = key_.x & bit, z = key_.z & bit;
  if (x && z) return Axis::Y;
  if (x) return Axis::X;
  if (z) return Axis::Z;
  return std::nullopt;
}

PauliWord& PauliWord::set(int qubit, std::optional<Axis> a) {
  if (qubit < 0 || qubit >= n_qubits_) {
    throw std::invalid_argument("qubit index out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  key_.x &= ~bit;
  key_.z &= ~bit;
  if (a == Axis::X || a == Axis::Y) key_.x |= bit;
  if (a == Axis::Z || a == Axis::Y) key_.z |= bit;
  return *this;
}

std::vector<int> PauliWord::qubits() const {
  std::vector<int> out;
  for (std::uint64_t s = support(); s; s &= s - 1) {
    out.push_back(std::countr_zero(s));
  }
  return out;
}

PauliWord PauliWord::with_phase(int exponent) const {
  return {n_qubits_, key_, exponent};
}

bool PauliWord::commutes_with(const PauliWord& other) const {
  check_same_size(n_qubits_, other.n_qubits_);
  const std::uint64_t s =
      (key_.x & other.key_.z) ^ (key_.z & other.key_.x);
  return std::popcount(s) % 2 == 0;
}

std::string PauliWord::to_string() const {
  static constexpr const char* kPrefix[4] = {"", "+i ", "-", "-i "};
  std::string out = kPrefix[phase_];
  if (is_identity()) return out + "I";
  bool first = true;
  for (int q = n_qubits_ - 1; q >= 0; --q) {
    if (auto a = axis(q)) {
      if (!first) out += ' ';
      out += axis_letter(*a);
      out += std::to_string(q);
      first = false;
    }
  }
  return out;
}

PauliWord operator*(const PauliWord& a, const PauliWord& b) {
  check_same_size(a.n_qubits(), b.n_qubits());
  const WordKey ka = a.key(), kb = b.key();
  const int phase =
      a.phase_exponent() + b.phase_exponent() + product_phase(ka, kb);
  return {a.n_qubits(), {ka.x ^ kb.x, ka.z ^ kb.z}, phase};
}

PauliSum::PauliSum(int n_qubits, double drop_tol)
    : n_qubits_(n_qubits), drop_tol_(drop_tol) {
  check_qubits(n_qubits);
}

cplx PauliSum::coefficient(const PauliWord& w) const {
  auto it = terms_.find(w.key());
  return it == terms_.end() ? cplx{} : it->second * w.phase();
}

PauliSum& PauliSum::add(const PauliWord& w, cplx coeff) {
  check_same_size(n_qubits_, w.n_qubits());
  const cplx c = coeff * w.phase();
  auto [it, inserted] = terms_.try_emplace(w.key(), c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < drop_tol_) terms_.erase(it);
  return *this;
}

PauliSum& PauliSum::add(const PauliSum& other, cplx scale) {
  check_same_size(n_qubits_, other.n_qubits_);
  for (const auto& [key, c] : other.terms_) {
    add(PauliWord(n_qubits_, key), scale * c);
  }
  return *this;
}

PauliSum& PauliSum::operator*=(cplx s) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    if (std::abs(it->second) < drop_tol_) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

bool PauliSum::is_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(), [tol](const auto& kv) {
    return std::abs(kv.second.imag()) <= tol;
  });
}

double PauliSum::max_abs_diff(const PauliSum& other) const {
  PauliSum diff(n_qubits_, 0.0);
  diff.add(*this);
  diff.add(other, -1.0);
  double m = 0;
  for (const auto& [key, c] : diff) m = std::max(m, std::abs(c));
  return m;
}

PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
PauliSum operator*(PauliSum a, cplx s) { return a *= s; }
PauliSum operator*(cplx s, PauliSum a) { return a *= s; }

PauliSum operator*(const PauliSum& h, const PauliWord& w) {
  PauliSum out(h.n_qubits(), h.drop_tol());
  for (const auto& [key, c] : h) out.add(h.word(key) * w, c);
  return out;
}

PauliSum operator*(const PauliWord& w, const PauliSum& h) {
  PauliSum out(h.n_qubits(), h.drop_tol());
  for (const auto& [key, c] : h) out.add(w * h.word(key), c);
  return out;
}

PauliSum commutator(const PauliWord& a, const PauliWord& b) {
  PauliSum out(a.n_qubits());
  if (!a.commutes_with(b)) out.add(a * b, 2.0);
  return out;
}

PauliSum sum_commutator(const PauliSum& h, const PauliWord& p) {
  check_same_size(h.n_qubits(), p.n_qubits());
  PauliSum out(h.n_qubits(), h.drop_tol());
  for (const auto& [key, c] : h) {
    const PauliWord w = h.word(key);
    if (!w.commutes_with(p)) out.add(w * p, 2.0 * c);
  }
  return out;
}

PauliSum similarity_transform(const PauliSum& h, const PauliWord& p,
                              double tau) {
  check_same_size(h.n_qubits(), p.n_qubits());
  if (p.phase_exponent() != 0) {
    throw std::invalid_argument("entangler generator must have phase +1");
  }
  const double c = std::cos(tau), s = std::sin(tau);
  PauliSum out(h.n_qubits(), h.drop_tol());
  for (const auto& [key, coeff] : h) {
    const PauliWord w = h.word(key);
    if (w.commutes_with(p)) {
      out.add(w, coeff);
    } else {
      out.add(w, c * coeff);
      out.add(w * p, cplx(0, -s) * coeff);
    }
  }
  return out;
}

PauliSum similarity_transform_expanded(const PauliSum& h, const PauliWord& p,
                                       double tau) {
  if (p.phase_exponent() != 0) {
    throw std::invalid_argument("entangler generator must have phase +1");
  }
  const PauliSum comm = sum_commutator(h, p);
  PauliSum out = h;
  out.add(comm, cplx(0, -std::sin(tau) / 2));
  out.add(p * comm, (1 - std::cos(tau)) / 2);
  return out;
}

std::vector<PauliWord> enumerate_entanglers(int n_qubits, int min_len,
                                            int max_len) {
  check_qubits(n_qubits);
  if (min_len < 2 || min_len > max_len || max_len > n_qubits) {
    throw std::invalid_argument(
        "entangler lengths must satisfy 2 <= min <= max <= n_qubits");
  }
  if (n_qubits > 16) {
    throw std::invalid_argument("entangler enumeration limited to 16 qubits");
  }
  static constexpr std::optional<Axis> kLetters[4] = {std::nullopt, Axis::X,
                                                      Axis::Y, Axis::Z};
  std::vector<PauliWord> out;
  const std::uint64_t total = std::uint64_t{1} << (2 * n_qubits);
  for (std::uint64_t code = 0; code < total; ++code) {
    PauliWord w(n_qubits);
    // Base-4 digit q (from the top) is the letter on qubit n-1-q.
    for (int q = 0; q < n_qubits; ++q) {
      w.set(q, kLetters[(code >> (2 * q)) & 3]);
    }
    const int len = w.length();
    if (len >= min_len && len <= max_len) out.push_back(w);
  }
  return out;
}

std::uint64_t entangler_count(int n_qubits) {
  return (std::uint64_t{1} << (2 * n_qubits)) - 3 * n_qubits - 1;
}

}  // namespace qcc
