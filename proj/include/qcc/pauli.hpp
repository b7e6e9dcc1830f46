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

#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcc {

using cplx = std::complex<double>;

/// Words are stored as 64-bit masks, so this is a hard upper bound.
inline constexpr int kMaxQubits = 64;

/// Default magnitude below which PauliSum coefficients are dropped.
inline constexpr double kDefaultDropTol = 1e-12;

enum class Axis : std::uint8_t { X, Y, Z };

char axis_letter(Axis a);

/// Phase-free key of a Pauli word: bit q of `x` / `z` set means the factor on
/// qubit q has an X / Z component (both set = Y).
struct WordKey {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  auto operator<=>(const WordKey&) const = default;
};

/**
 * A tensor product of single-qubit Pauli operators times a phase in
 * {+1, +i, -1, -i}.
 *
 * Identity factors are never stored; the phase is kept as an exponent of i.
 * Qubit 0 is the least significant bit of both masks.
 */
class PauliWord {
 public:
  PauliWord() = default;
  explicit PauliWord(int n_qubits);
  PauliWord(int n_qubits, WordKey key, int phase_exponent = 0);

  /// Parses "X2 X1 Y0" style text (case-insensitive, any qubit order).
  /// "I" or an empty string is the identity. Throws std::invalid_argument.
  static PauliWord parse(std::string_view text, int n_qubits);

  int n_qubits() const { return n_qubits_; }
  WordKey key() const { return key_; }
  std::uint64_t x_mask() const { return key_.x; }
  std::uint64_t z_mask() const { return key_.z; }
  std::uint64_t support() const { return key_.x | key_.z; }

  /// Phase as a power of i, in [0, 4).
  int phase_exponent() const { return phase_; }
  cplx phase() const;

  /// Number of non-identity factors.
  int length() const;
  bool is_identity() const { return support() == 0; }

  std::optional<Axis> axis(int qubit) const;
  /// Sets (or with nullopt, clears) the factor on `qubit`.
  PauliWord& set(int qubit, std::optional<Axis> a);

  /// Support qubits in ascending order.
  std::vector<int> qubits() const;

  PauliWord without_phase() const { return {n_qubits_, key_, 0}; }
  PauliWord with_phase(int exponent) const;

  bool commutes_with(const PauliWord& other) const;

  /// Canonical text, descending qubit order: "X2 Y0", "I". A non-unit phase
  /// is written as a prefix: "-i X2 Y0".
  std::string to_string() const;

  bool operator==(const PauliWord&) const = default;

 private:
  int n_qubits_ = 0;
  WordKey key_{};
  int phase_ = 0;
};

/// Exact group product a * b, including the accumulated phase.
PauliWord operator*(const PauliWord& a, const PauliWord& b);

/**
 * Weighted sum of phase-free Pauli words.
 *
 * Coefficients of repeated words are merged on insert and terms whose
 * magnitude falls below the drop tolerance are erased. Iteration order is
 * lexicographic on (x mask, z mask), which keeps serialized output stable.
 */
class PauliSum {
 public:
  using Terms = std::map<WordKey, cplx>;

  PauliSum() = default;
  explicit PauliSum(int n_qubits, double drop_tol = kDefaultDropTol);

  int n_qubits() const { return n_qubits_; }
  double drop_tol() const { return drop_tol_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  const Terms& terms() const { return terms_; }
  Terms::const_iterator begin() const { return terms_.begin(); }
  Terms::const_iterator end() const { return terms_.end(); }

  PauliWord word(const WordKey& key) const { return {n_qubits_, key, 0}; }

  /// Coefficient of a phase-free word (0 if absent).
  cplx coefficient(const PauliWord& w) const;

  /// Adds coeff * w; the phase of w is folded into the coefficient.
  PauliSum& add(const PauliWord& w, cplx coeff = 1.0);
  PauliSum& add(const PauliSum& other, cplx scale = 1.0);

  PauliSum& operator+=(const PauliSum& other) { return add(other, 1.0); }
  PauliSum& operator-=(const PauliSum& other) { return add(other, -1.0); }
  PauliSum& operator*=(cplx s);

  /// True when every coefficient is real to within `tol`; for a sum of
  /// phase-free words this is Hermiticity.
  bool is_hermitian(double tol = 1e-12) const;

  /// Largest |coefficient| difference against another sum.
  double max_abs_diff(const PauliSum& other) const;

 private:
  int n_qubits_ = 0;
  double drop_tol_ = kDefaultDropTol;
  Terms terms_;
};

PauliSum operator+(PauliSum a, const PauliSum& b);
PauliSum operator-(PauliSum a, const PauliSum& b);
PauliSum operator*(PauliSum a, cplx s);
PauliSum operator*(cplx s, PauliSum a);
/// Termwise products h * w and w * h.
PauliSum operator*(const PauliSum& h, const PauliWord& w);
PauliSum operator*(const PauliWord& w, const PauliSum& h);

/// ab - ba: empty when the words commute, otherwise the single word 2ab.
PauliSum commutator(const PauliWord& a, const PauliWord& b);

/// [h, p] computed termwise.
PauliSum sum_commutator(const PauliSum& h, const PauliWord& p);

/**
 * exp(i tau p / 2) h exp(-i tau p / 2) for a phase-(+1) word p.
 *
 * Uses the involution p^2 = 1: terms commuting with p are unchanged and each
 * anticommuting term t becomes cos(tau) t - i sin(tau) t p.
 */
PauliSum similarity_transform(const PauliSum& h, const PauliWord& p,
                              double tau);

/// Same transform evaluated literally as
/// h - (i sin tau / 2)[h, p] + ((1 - cos tau) / 2) p [h, p].
PauliSum similarity_transform_expanded(const PauliSum& h, const PauliWord& p,
                                       double tau);

/// All phase-(+1) words with length in [min_len, max_len], ordered
/// lexicographically by their text with I < X < Y < Z from the highest qubit
/// down.
std::vector<PauliWord> enumerate_entanglers(int n_qubits, int min_len,
                                            int max_len);

/// 4^n - 3n - 1 for n <= 31.
std::uint64_t entangler_count(int n_qubits);

}  // namespace qcc
