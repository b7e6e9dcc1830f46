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

#include "scan.hpp"

#include <algorithm>
#include <sstream>

#include "qcc/parallel.hpp"
#include "qcc/simstate.hpp"

namespace qcc::cli {

std::vector<std::filesystem::path> list_hamiltonians(
    const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw InputError("not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".ham") {
      files.push_back(e.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::vector<ScanRow> run_scan(const std::vector<std::filesystem::path>& files,
                              const std::string& entangler_text,
                              const ScanOptions& opts) {
  std::vector<ScanRow> rows(files.size());
  QccOptions qopts = opts.qcc;
  qopts.jobs = 1;
  qopts.qmf.jobs = 1;
  parallel_for(files.size(), opts.jobs, [&](std::size_t i) {
    ScanRow& row = rows[i];
    row.source = files[i].filename().string();
    try {
      ProblemInstance p = read_problem_file(files[i]);
      if (opts.sector) p = reduce_problem(p, *opts.sector);
      row.geometry_tag = p.geometry_tag;
      row.r = p.bond_length();
      const auto gens = parse_entangler_list(entangler_text, p.n_qubits);
      row.n_entanglers = static_cast<int>(gens.size());
      row.e_exact = exact_ground(p.hamiltonian, false).ground_energy;
      const QmfResult qmf = qmf_minimize(p, qopts.qmf);
      row.e_qmf = qmf.energy;
      row.qmf_converged = qmf.converged;
      if (p.spin_sq_op) {
        row.e_cqmf = qmf_minimize_constrained(p, qopts.penalty, qopts.qmf).energy;
      }
      const QccResult q = qcc_minimize(p, gens, qopts);
      row.e_qcc = q.energy;
      row.spin_expectation = q.spin_expectation;
      row.parameter_count = q.parameter_count;
      row.qcc_converged = q.converged;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  });
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ScanRow& a, const ScanRow& b) {
                     if (a.r.has_value() != b.r.has_value()) return a.r.has_value();
                     if (a.r && *a.r != *b.r) return *a.r < *b.r;
                     return a.source < b.source;
                   });
  return rows;
}

std::string format_scan_csv(const std::vector<ScanRow>& rows) {
  const auto opt = [](const std::optional<double>& v) {
    return v ? format_number(*v) : std::string();
  };
  std::ostringstream os;
  os << "geometry_tag,R,E_exact,E_QMF,E_cQMF,E_QCC,spin_expectation,"
        "n_entanglers,parameter_count,qmf_converged,qcc_converged,error\n";
  for (const auto& r : rows) {
    std::string err = r.error;
    std::replace(err.begin(), err.end(), ',', ';');
    os << r.geometry_tag << ',' << opt(r.r) << ',';
    if (r.ok()) {
      os << format_number(r.e_exact) << ',' << format_number(r.e_qmf) << ','
         << opt(r.e_cqmf) << ',' << format_number(r.e_qcc) << ','
         << opt(r.spin_expectation) << ',' << r.n_entanglers << ','
         << r.parameter_count << ',' << (r.qmf_converged ? 1 : 0) << ','
         << (r.qcc_converged ? 1 : 0) << ",\n";
    } else {
      os << ",,,,,,,,," << err << '\n';
    }
  }
  return os.str();
}

}  // namespace qcc::cli
