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

// Qubit Hamiltonian files and stationary-qubit sector reduction.
//
// File format (line oriented, UTF-8):
//
//   # comment
//   nqubits 4
//   tag R=1.00
//   term -0.3276 I
//   term 0.1371 Z1 Z0
//   operator number          # following terms belong to N
//   term 2 I
//   operator spin2           # following terms belong to S^2
//   term 0.75 I
//
// Hamiltonian coefficients must be real decimals; operator blocks also accept
// "(re,im)" but must be Hermitian after merging.

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qcc/pauli.hpp"

namespace qcc {

/// Malformed or inconsistent input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ProblemInstance {
  int n_qubits = 0;
  PauliSum hamiltonian;
  std::optional<PauliSum> number_op;
  std::optional<PauliSum> spin_sq_op;
  std::string geometry_tag;
  std::vector<std::string> comments;

  /// Bond length parsed from a tag of the form "R=<value>" (Angstrom).
  std::optional<double> bond_length() const;
};

ProblemInstance parse_problem(std::string_view text);
ProblemInstance read_problem_file(const std::filesystem::path& path);

/// Inverse of parse_problem; coefficients printed with 15 significant digits.
std::string serialize_problem(const ProblemInstance& problem);

/// Qubit -> eigenvalue (+1 / -1) of Z on that qubit.
struct SectorSpec {
  std::map<int, int> assignments;

  /// Parses "2:-1,5:+1".
  static SectorSpec parse(std::string_view text);
  std::string to_string() const;
};

/// Qubits on which no term has an X or Y factor.
std::set<int> find_stationary_qubits(const PauliSum& h);

/// Replaces Z on each assigned qubit by its eigenvalue and re-indexes the
/// surviving qubits densely in ascending original order. Throws InputError if
/// an assigned qubit is not stationary or every qubit would be removed.
PauliSum reduce_to_sector(const PauliSum& h, const SectorSpec& sector);

/// Applies the same reduction to the Hamiltonian and the symmetry operators.
ProblemInstance reduce_problem(const ProblemInstance& problem,
                               const SectorSpec& sector);

/// Every +1/-1 assignment of the given qubits.
std::vector<SectorSpec> all_sectors(const std::set<int>& qubits);

/// Entangler list: one Pauli string per line, "#" starts a comment (rank
/// metadata may follow a generator on the same line).
std::vector<PauliWord> parse_entangler_list(std::string_view text,
                                            int n_qubits);
std::vector<PauliWord> read_entangler_file(const std::filesystem::path& path,
                                           int n_qubits);

/// Shortest round-trip-stable decimal with 15 significant digits.
std::string format_number(double v);

}  // namespace qcc
