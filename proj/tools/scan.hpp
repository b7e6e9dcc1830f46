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

// Potential-energy scans: exact, QMF, constrained QMF and QCC energies for a
// directory of Hamiltonian files.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qcc/hamio.hpp"
#include "qcc/qcc.hpp"

namespace qcc::cli {

struct ScanRow {
  std::string source;  ///< file name
  std::string geometry_tag;
  std::optional<double> r;  ///< Angstrom, from the tag
  double e_exact = 0;
  double e_qmf = 0;
  std::optional<double> e_cqmf;
  double e_qcc = 0;
  std::optional<double> spin_expectation;  ///< QCC <S^2>
  int n_entanglers = 0;
  int parameter_count = 0;
  bool qmf_converged = false;
  bool qcc_converged = false;
  std::string error;  ///< non-empty when the geometry failed

  bool ok() const { return error.empty(); }
};

struct ScanOptions {
  std::optional<SectorSpec> sector;
  QccOptions qcc;
  int jobs = 1;  ///< geometries in parallel
};

/// "*.ham" files of a directory, sorted by name.
std::vector<std::filesystem::path> list_hamiltonians(
    const std::filesystem::path& dir);

/// One row per file, sorted by R (untagged rows last, then by file name).
/// `entangler_text` is an entangler list parsed against each (reduced)
/// problem's qubit count.
std::vector<ScanRow> run_scan(const std::vector<std::filesystem::path>& files,
                              const std::string& entangler_text,
                              const ScanOptions& opts);

std::string format_scan_csv(const std::vector<ScanRow>& rows);

}  // namespace qcc::cli
