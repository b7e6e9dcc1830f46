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

#include "qcc/hamio.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qcc {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string strip_comment(std::string_view line) {
  return trim(line.substr(0, line.find('#')));
}

double parse_real(const std::string& tok, int line_no) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || !std::isfinite(v)) {
    throw ParseError(line_no, "bad number '" + tok + "'");
  }
  return v;
}

cplx parse_coefficient(const std::string& tok, int line_no, bool* complex_form) {
  *complex_form = false;
  if (!tok.empty() && tok.front() == '(') {
    const auto comma = tok.find(',');
    if (tok.back() != ')' || comma == std::string::npos) {
      throw ParseError(line_no, "bad complex coefficient '" + tok + "'");
    }
    *complex_form = true;
    return {parse_real(tok.substr(1, comma - 1), line_no),
            parse_real(tok.substr(comma + 1, tok.size() - comma - 2), line_no)};
  }
  return parse_real(tok, line_no);
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit_terms(std::ostringstream& out, const PauliSum& sum) {
  for (const auto& [key, c] : sum) {
    out << "term ";
    if (c.imag() == 0) {
      out << format_number(c.real());
    } else {
      out << '(' << format_number(c.real()) << ',' << format_number(c.imag())
          << ')';
    }
    out << ' ' << sum.word(key).to_string() << '\n';
  }
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::optional<double> ProblemInstance::bond_length() const {
  const auto pos = geometry_tag.find("R=");
  if (pos == std::string::npos) return std::nullopt;
  try {
    return std::stod(geometry_tag.substr(pos + 2));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

ProblemInstance parse_problem(std::string_view text) {
  ProblemInstance p;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  enum class Block { Hamiltonian, Number, Spin2 } block = Block::Hamiltonian;
  PauliSum* target = nullptr;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string trimmed = trim(raw);
    if (trimmed.empty()) continue;
    if (trimmed.front() == '#') {
      p.comments.push_back(trim(std::string_view(trimmed).substr(1)));
      continue;
    }
    const std::string line = strip_comment(trimmed);
    std::istringstream ls(line);
    std::string keyword;
    ls >> keyword;

    if (keyword == "nqubits") {
      if (p.n_qubits != 0) throw ParseError(line_no, "nqubits given twice");
      std::string tok, extra;
      if (!(ls >> tok) || (ls >> extra)) {
        throw ParseError(line_no, "expected 'nqubits <N>'");
      }
      const double n = parse_real(tok, line_no);
      if (n < 1 || n > kMaxQubits || n != std::floor(n)) {
        throw ParseError(line_no, "qubit count out of range");
      }
      p.n_qubits = static_cast<int>(n);
      p.hamiltonian = PauliSum(p.n_qubits);
      target = &p.hamiltonian;
    } else if (keyword == "tag") {
      std::string rest;
      std::getline(ls, rest);
      p.geometry_tag = trim(rest);
    } else if (keyword == "operator") {
      if (p.n_qubits == 0) throw ParseError(line_no, "operator before nqubits");
      std::string name;
      ls >> name;
      if (name == "number") {
        if (p.number_op) throw ParseError(line_no, "duplicate number block");
        block = Block::Number;
        p.number_op = PauliSum(p.n_qubits);
        target = &*p.number_op;
      } else if (name == "spin2") {
        if (p.spin_sq_op) throw ParseError(line_no, "duplicate spin2 block");
        block = Block::Spin2;
        p.spin_sq_op = PauliSum(p.n_qubits);
        target = &*p.spin_sq_op;
      } else {
        throw ParseError(line_no, "unknown operator block '" + name + "'");
      }
    } else if (keyword == "term") {
      if (target == nullptr) throw ParseError(line_no, "term before nqubits");
      std::string coeff_tok;
      if (!(ls >> coeff_tok)) throw ParseError(line_no, "term needs a coefficient");
      bool complex_form = false;
      const cplx c = parse_coefficient(coeff_tok, line_no, &complex_form);
      if (complex_form && block == Block::Hamiltonian) {
        throw ParseError(line_no,
                         "complex coefficients are not allowed in the "
                         "Hamiltonian");
      }
      std::string rest;
      std::getline(ls, rest);
      if (trim(rest).empty()) throw ParseError(line_no, "term needs a Pauli string");
      try {
        target->add(PauliWord::parse(rest, p.n_qubits), c);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
    } else {
      throw ParseError(line_no, "unknown keyword '" + keyword + "'");
    }
  }
  if (p.n_qubits == 0) throw ParseError(line_no, "missing 'nqubits' line");
  if (!p.hamiltonian.is_hermitian()) {
    throw InputError("Hamiltonian is not Hermitian");
  }
  for (const auto* op : {&p.number_op, &p.spin_sq_op}) {
    if (*op && !(*op)->is_hermitian()) {
      throw InputError("symmetry operator is not Hermitian");
    }
  }
  return p;
}

ProblemInstance read_problem_file(const std::filesystem::path& path) {
  try {
    return parse_problem(read_text(path));
  } catch (const ParseError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string serialize_problem(const ProblemInstance& problem) {
  std::ostringstream out;
  for (const auto& c : problem.comments) out << "# " << c << '\n';
  out << "nqubits " << problem.n_qubits << '\n';
  if (!problem.geometry_tag.empty()) {
    out << "tag " << problem.geometry_tag << '\n';
  }
  emit_terms(out, problem.hamiltonian);
  if (problem.number_op) {
    out << "operator number\n";
    emit_terms(out, *problem.number_op);
  }
  if (problem.spin_sq_op) {
    out << "operator spin2\n";
    emit_terms(out, *problem.spin_sq_op);
  }
  return out.str();
}

SectorSpec SectorSpec::parse(std::string_view text) {
  SectorSpec s;
  std::stringstream in{std::string(text)};
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw InputError("sector entry '" + item + "' is not <qubit>:<+1|-1>");
    }
    int q = 0, v = 0;
    try {
      q = std::stoi(item.substr(0, colon));
      v = std::stoi(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw InputError("sector entry '" + item + "' is not <qubit>:<+1|-1>");
    }
    if (q < 0 || (v != 1 && v != -1)) {
      throw InputError("sector entry '" + item + "' is not <qubit>:<+1|-1>");
    }
    if (!s.assignments.emplace(q, v).second) {
      throw InputError("qubit " + std::to_string(q) + " assigned twice");
    }
  }
  if (s.assignments.empty()) throw InputError("empty sector specification");
  return s;
}

std::string SectorSpec::to_string() const {
  std::string out;
  for (const auto& [q, v] : assignments) {
    if (!out.empty()) out += ',';
    out += std::to_string(q) + (v > 0 ? ":+1" : ":-1");
  }
  return out;
}

std::set<int> find_stationary_qubits(const PauliSum& h) {
  std::uint64_t flipped = 0;
  for (const auto& [key, c] : h) flipped |= key.x;
  std::set<int> out;
  for (int q = 0; q < h.n_qubits(); ++q) {
    if (!((flipped >> q) & 1)) out.insert(q);
  }
  return out;
}

PauliSum reduce_to_sector(const PauliSum& h, const SectorSpec& sector) {
  const int n = h.n_qubits();
  std::uint64_t assigned = 0;
  for (const auto& [q, v] : sector.assignments) {
    if (q >= n) {
      throw InputError("sector qubit " + std::to_string(q) + " out of range");
    }
    assigned |= std::uint64_t{1} << q;
  }
  const std::set<int> stationary = find_stationary_qubits(h);
  for (const auto& [q, v] : sector.assignments) {
    if (!stationary.count(q)) {
      throw InputError("sector qubit " + std::to_string(q) +
                       " is not stationary");
    }
  }
  const int n_out = n - std::popcount(assigned);
  if (n_out < 1) throw InputError("sector removes every qubit");

  std::vector<int> new_index(n, -1);
  for (int q = 0, next = 0; q < n; ++q) {
    if (!((assigned >> q) & 1)) new_index[q] = next++;
  }

  PauliSum out(n_out, h.drop_tol());
  for (const auto& [key, c] : h) {
    cplx coeff = c;
    for (const auto& [q, v] : sector.assignments) {
      if ((key.z >> q) & 1) coeff *= v;
    }
    WordKey k{};
    for (int q = 0; q < n; ++q) {
      if (new_index[q] < 0) continue;
      k.x |= ((key.x >> q) & 1) << new_index[q];
      k.z |= ((key.z >> q) & 1) << new_index[q];
    }
    out.add(PauliWord(n_out, k), coeff);
  }
  return out;
}

ProblemInstance reduce_problem(const ProblemInstance& problem,
                               const SectorSpec& sector) {
  ProblemInstance out;
  out.hamiltonian = reduce_to_sector(problem.hamiltonian, sector);
  out.n_qubits = out.hamiltonian.n_qubits();
  if (problem.number_op) {
    out.number_op = reduce_to_sector(*problem.number_op, sector);
  }
  if (problem.spin_sq_op) {
    out.spin_sq_op = reduce_to_sector(*problem.spin_sq_op, sector);
  }
  out.geometry_tag = problem.geometry_tag;
  out.comments = problem.comments;
  out.comments.push_back("sector " + sector.to_string());
  return out;
}

std::vector<SectorSpec> all_sectors(const std::set<int>& qubits) {
  const std::vector<int> qs(qubits.begin(), qubits.end());
  std::vector<SectorSpec> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << qs.size()); ++bits) {
    SectorSpec s;
    for (std::size_t i = 0; i < qs.size(); ++i) {
      s.assignments[qs[i]] = ((bits >> i) & 1) ? -1 : 1;
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<PauliWord> parse_entangler_list(std::string_view text,
                                            int n_qubits) {
  std::vector<PauliWord> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_comment(raw);
    if (line.empty()) continue;
    try {
      PauliWord w = PauliWord::parse(line, n_qubits);
      if (w.length() < 2) {
        throw ParseError(line_no, "entangler '" + line +
                                      "' must act on at least two qubits");
      }
      out.push_back(w);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return out;
}

std::vector<PauliWord> read_entangler_file(const std::filesystem::path& path,
                                           int n_qubits) {
  try {
    return parse_entangler_list(read_text(path), n_qubits);
  } catch (const ParseError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace qcc
