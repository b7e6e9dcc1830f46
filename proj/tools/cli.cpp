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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "qcc/factor.hpp"
#include "qcc/hamio.hpp"
#include "qcc/qcc.hpp"
#include "qcc/rank.hpp"
#include "qcc/simstate.hpp"
#include "scan.hpp"

namespace qcc::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Flags {
  std::string ham;
  std::uint64_t seed = kDefaultSeed;
  int jobs = 1;
  double tol_grad = 1e-8;
  double penalty = kDefaultPenalty;
  bool constrained = false;
  std::string out;
  std::string format = "csv";
  std::string sector;
  std::string entanglers;
  std::vector<std::string> generators;

  // rank
  std::string pool = "2q";
  int top = 20;
  double d1_tol = 1e-6;
  double curv_tol = 1e-6;
  double disc_tol = 1e-4;
  double pole_tol = 1e-6;

  // scan
  std::string dir;

  // factorize
  std::vector<std::string> words;
  int nqubits = 0;

  // exact
  bool sectors = false;
  bool spectrum = false;
};

class Session {
 public:
  Session(const Flags& f, std::ostream& out, std::ostream& err)
      : f_(f), out_(out), err_(err) {}

  int rank();
  int optimize();
  int scan();
  int factorize();
  int exact();
  int taper();

 private:
  bool json() const { return f_.format == "json"; }

  void emit(const std::string& text) {
    if (f_.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(f_.out);
    if (!file) throw InputError("cannot write " + f_.out);
    file << text;
  }

  void require_ham() const {
    if (f_.ham.empty()) throw InputError("--ham is required");
  }

  ProblemInstance load() const {
    require_ham();
    ProblemInstance p = read_problem_file(f_.ham);
    if (!f_.sector.empty()) p = reduce_problem(p, SectorSpec::parse(f_.sector));
    return p;
  }

  QmfOptions qmf_options() const {
    QmfOptions q;
    q.seed = f_.seed;
    q.grad_tol = f_.tol_grad;
    q.jobs = f_.jobs;
    return q;
  }

  std::string read_text(const std::string& path) const {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::vector<PauliWord> generators(int n) const {
    std::vector<PauliWord> gens;
    if (!f_.entanglers.empty()) {
      gens = parse_entangler_list(read_text(f_.entanglers), n);
    }
    for (const auto& g : f_.generators) gens.push_back(PauliWord::parse(g, n));
    return gens;
  }

  const Flags& f_;
  std::ostream& out_;
  std::ostream& err_;
};

Json angles_json(const BlochConfig& c) {
  Json a = Json::array();
  for (const auto& x : c.angles()) a.push_back({x.theta, x.phi});
  return a;
}

Json optional_json(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::vector<std::string> score_flags(const EntanglerScore& s) {
  std::vector<std::string> flags;
  if (s.discontinuity_flag) flags.emplace_back("discontinuous");
  if (s.constrained_reference) flags.emplace_back("constrained");
  if (s.pole_resolved) flags.emplace_back("pole_resolved");
  if (!s.delta_e_converged) flags.emplace_back("not_converged");
  return flags;
}

Json qmf_json(const QmfResult& r) {
  return Json{{"energy", r.energy},
              {"objective", r.objective},
              {"constrained", r.constrained},
              {"penalty_weight", r.penalty_weight},
              {"spin_expectation", optional_json(r.spin_expectation)},
              {"number_expectation", optional_json(r.number_expectation)},
              {"converged", r.converged},
              {"restarts_used", r.restarts_used},
              {"angles", angles_json(r.config)}};
}

int Session::rank() {
  const ProblemInstance p = load();
  std::vector<PauliWord> pool;
  if (!f_.entanglers.empty() || !f_.generators.empty()) {
    pool = generators(p.n_qubits);
  } else if (f_.pool == "2q") {
    pool = enumerate_entanglers(p.n_qubits, 2, 2);
  } else if (f_.pool == "all") {
    pool = enumerate_entanglers(p.n_qubits, 2, p.n_qubits);
  } else {
    throw InputError("--pool must be 2q or all");
  }

  RankOptions o;
  o.grad_tol = f_.d1_tol;
  o.curv_tol = f_.curv_tol;
  o.disc_tol = f_.disc_tol;
  o.pole_tol = f_.pole_tol;
  o.top_k = f_.top;
  o.constrained = f_.constrained;
  o.penalty = f_.penalty;
  o.qmf = qmf_options();
  o.jobs = f_.jobs;
  const RankReport report = screen(p, pool, o);

  if (json()) {
    Json scores = Json::array();
    for (const auto& s : report.scores) {
      scores.push_back({{"generator", s.generator.to_string()},
                        {"tier", tier_name(s.tier)},
                        {"d1", s.first_derivative},
                        {"d2", optional_json(s.second_derivative)},
                        {"delta_e", optional_json(s.delta_e)},
                        {"delta_e_tau", optional_json(s.delta_e_tau)},
                        {"flags", score_flags(s)}});
    }
    Json doc{{"geometry_tag", p.geometry_tag},
             {"n_qubits", p.n_qubits},
             {"pool_size", pool.size()},
             {"reference", qmf_json(report.reference)},
             {"scores", scores}};
    emit(doc.dump(2) + "\n");
  } else {
    emit(format_rank_csv(report));
  }
  if (!report.reference.converged) {
    err_ << "warning: QMF reference did not converge\n";
    return kExitConvergence;
  }
  return kExitOk;
}

int Session::optimize() {
  const ProblemInstance p = load();
  const auto gens = generators(p.n_qubits);
  QccOptions o;
  o.qmf = qmf_options();
  o.penalty = f_.penalty;
  o.jobs = f_.jobs;
  const QccResult r = qcc_minimize(p, gens, o);
  std::optional<double> exact;
  if (p.n_qubits <= kDenseQubitCap) {
    exact = exact_ground(p.hamiltonian, false).ground_energy;
  }

  if (json()) {
    Json amps = Json::array();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      amps.push_back({{"generator", gens[k].to_string()},
                      {"tau", r.amplitudes(static_cast<Eigen::Index>(k))}});
    }
    Json doc{{"geometry_tag", p.geometry_tag},
             {"energy", r.energy},
             {"qmf_energy", r.qmf_energy},
             {"exact_energy", optional_json(exact)},
             {"spin_expectation", optional_json(r.spin_expectation)},
             {"number_expectation", optional_json(r.number_expectation)},
             {"parameter_count", r.parameter_count},
             {"converged", r.converged},
             {"best_start", r.best_start},
             {"amplitudes", amps},
             {"angles", angles_json(r.config)},
             {"history", r.history}};
    emit(doc.dump(2) + "\n");
  } else {
    std::ostringstream os;
    const auto opt = [](const std::optional<double>& v) {
      return v ? format_number(*v) : std::string();
    };
    os << "quantity,value\n"
       << "energy," << format_number(r.energy) << '\n'
       << "qmf_energy," << format_number(r.qmf_energy) << '\n'
       << "exact_energy," << opt(exact) << '\n'
       << "spin_expectation," << opt(r.spin_expectation) << '\n'
       << "number_expectation," << opt(r.number_expectation) << '\n'
       << "parameter_count," << r.parameter_count << '\n'
       << "converged," << (r.converged ? 1 : 0) << '\n';
    for (std::size_t k = 0; k < gens.size(); ++k) {
      os << "tau[" << gens[k].to_string() << "],"
         << format_number(r.amplitudes(static_cast<Eigen::Index>(k))) << '\n';
    }
    for (int q = 0; q < r.config.n_qubits(); ++q) {
      os << "theta[" << q << "]," << format_number(r.config[q].theta) << '\n'
         << "phi[" << q << "]," << format_number(r.config[q].phi) << '\n';
    }
    emit(os.str());
  }
  if (!r.converged) {
    err_ << "warning: QCC minimization did not converge\n";
    return kExitConvergence;
  }
  return kExitOk;
}

int Session::scan() {
  if (f_.dir.empty()) throw InputError("--dir is required");
  ScanOptions o;
  if (!f_.sector.empty()) o.sector = SectorSpec::parse(f_.sector);
  o.qcc.qmf = qmf_options();
  o.qcc.penalty = f_.penalty;
  o.jobs = f_.jobs;
  std::string ent_text = f_.entanglers.empty() ? "" : read_text(f_.entanglers);
  for (const auto& g : f_.generators) ent_text += "\n" + g;
  const auto rows = run_scan(list_hamiltonians(f_.dir), ent_text, o);

  if (json()) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json row{{"source", r.source}, {"geometry_tag", r.geometry_tag},
               {"R", optional_json(r.r)}};
      if (r.ok()) {
        row["E_exact"] = r.e_exact;
        row["E_QMF"] = r.e_qmf;
        row["E_cQMF"] = optional_json(r.e_cqmf);
        row["E_QCC"] = r.e_qcc;
        row["spin_expectation"] = optional_json(r.spin_expectation);
        row["n_entanglers"] = r.n_entanglers;
        row["parameter_count"] = r.parameter_count;
        row["qmf_converged"] = r.qmf_converged;
        row["qcc_converged"] = r.qcc_converged;
      } else {
        row["error"] = r.error;
      }
      arr.push_back(row);
    }
    emit(arr.dump(2) + "\n");
  } else {
    emit(format_scan_csv(rows));
  }

  const auto failed = std::count_if(rows.begin(), rows.end(),
                                    [](const ScanRow& r) { return !r.ok(); });
  for (const auto& r : rows) {
    if (!r.ok()) err_ << "error: " << r.source << ": " << r.error << '\n';
  }
  if (rows.empty() || failed == static_cast<long>(rows.size())) {
    err_ << "error: no geometry could be processed\n";
    return kExitInput;
  }
  const bool all_converged =
      std::all_of(rows.begin(), rows.end(), [](const ScanRow& r) {
        return !r.ok() || (r.qmf_converged && r.qcc_converged);
      });
  return all_converged ? kExitOk : kExitConvergence;
}

int Session::factorize() {
  std::vector<std::string> texts = f_.words;
  texts.insert(texts.end(), f_.generators.begin(), f_.generators.end());
  if (!f_.entanglers.empty()) {
    std::istringstream in(read_text(f_.entanglers));
    std::string line;
    while (std::getline(in, line)) {
      line = line.substr(0, line.find('#'));
      if (line.find_first_not_of(" \t\r") != std::string::npos) {
        texts.push_back(line);
      }
    }
  }
  if (texts.empty()) throw InputError("no Pauli words to factorize");
  int n = f_.nqubits;
  if (n == 0) {
    // Smallest register holding every word: parse against the cap and take
    // the highest qubit touched.
    for (const auto& t : texts) {
      const auto qs = PauliWord::parse(t, kMaxQubits).qubits();
      if (!qs.empty()) n = std::max(n, qs.back() + 1);
    }
  }
  std::ostringstream os;
  Json arr = Json::array();
  std::size_t total = 0;
  for (const auto& t : texts) {
    const FactorizedExp fe = qcc::factorize(PauliWord::parse(t, n));
    total += fe.two_qubit_count();
    if (json()) {
      Json factors = Json::array();
      for (const auto& fac : fe.factors) {
        const char* kind = fac.kind == FactorKind::Variable    ? "-i*t"
                           : fac.kind == FactorKind::FixedPlus ? "+i*pi/4"
                                                               : "-i*pi/4";
        factors.push_back(
            {{"coefficient", kind}, {"generator", fac.generator.to_string()}});
      }
      arr.push_back({{"word", fe.word.to_string()},
                     {"factors", factors},
                     {"two_qubit_count", fe.two_qubit_count()}});
    } else {
      os << format_factorization(fe);
    }
  }
  if (json()) {
    emit(Json{{"words", arr}, {"two_qubit_total", total}}.dump(2) + "\n");
  } else {
    if (texts.size() > 1) os << "# total two-qubit factors: " << total << '\n';
    emit(os.str());
  }
  return kExitOk;
}

int Session::exact() {
  require_ham();
  const ProblemInstance full = read_problem_file(f_.ham);
  struct Row {
    std::string label;
    int n_qubits;
    std::size_t terms;
    SpectrumResult spec;
  };
  std::vector<Row> rows;
  const auto add = [&rows](std::string label, const PauliSum& h) {
    rows.push_back({std::move(label), h.n_qubits(), h.size(),
                    exact_ground(h, false)});
  };
  if (!f_.sector.empty()) {
    const SectorSpec s = SectorSpec::parse(f_.sector);
    add("sector " + s.to_string(), reduce_to_sector(full.hamiltonian, s));
  } else {
    add("full", full.hamiltonian);
  }
  std::optional<double> sector_min;
  if (f_.sectors) {
    for (const auto& s :
         all_sectors(find_stationary_qubits(full.hamiltonian))) {
      if (s.assignments.empty()) continue;
      add("sector " + s.to_string(), reduce_to_sector(full.hamiltonian, s));
      const double e = rows.back().spec.ground_energy;
      sector_min = sector_min ? std::min(*sector_min, e) : e;
    }
  }

  if (json()) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json row{{"label", r.label},
               {"n_qubits", r.n_qubits},
               {"terms", r.terms},
               {"ground_energy", r.spec.ground_energy}};
      if (f_.spectrum) {
        row["eigenvalues"] = std::vector<double>(
            r.spec.eigenvalues.data(),
            r.spec.eigenvalues.data() + r.spec.eigenvalues.size());
      }
      arr.push_back(row);
    }
    Json doc{{"geometry_tag", full.geometry_tag}, {"rows", arr}};
    if (sector_min) doc["min_sector_ground_energy"] = *sector_min;
    emit(doc.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "label,n_qubits,terms,ground_energy"
       << (f_.spectrum ? ",eigenvalues" : "") << '\n';
    for (const auto& r : rows) {
      os << r.label << ',' << r.n_qubits << ',' << r.terms << ','
         << format_number(r.spec.ground_energy);
      if (f_.spectrum) {
        os << ',';
        for (Eigen::Index i = 0; i < r.spec.eigenvalues.size(); ++i) {
          os << (i ? " " : "") << format_number(r.spec.eigenvalues(i));
        }
      }
      os << '\n';
    }
    if (sector_min) {
      os << "min_sector,,," << format_number(*sector_min) << '\n';
    }
    emit(os.str());
  }
  return kExitOk;
}

int Session::taper() {
  require_ham();
  const ProblemInstance p = read_problem_file(f_.ham);
  if (f_.sector.empty()) {
    std::ostringstream os;
    os << "# stationary qubits:";
    for (int q : find_stationary_qubits(p.hamiltonian)) os << ' ' << q;
    os << '\n';
    emit(os.str());
    return kExitOk;
  }
  emit(serialize_problem(reduce_problem(p, SectorSpec::parse(f_.sector))));
  return kExitOk;
}

void add_global_flags(CLI::App& app, Flags& f) {
  app.add_option("--ham", f.ham, "Hamiltonian file");
  app.add_option("--seed", f.seed, "RNG seed for multi-start optimizers")
      ->capture_default_str();
  app.add_option("--jobs", f.jobs, "Worker threads (<= 0: all cores)")
      ->capture_default_str();
  app.add_option("--tol-grad", f.tol_grad,
                 "Optimizer gradient max-norm tolerance")
      ->capture_default_str();
  app.add_option("--penalty", f.penalty,
                 "Weight mu of the mu <S^2> spin penalty (Hartree)")
      ->capture_default_str();
  app.add_flag("--constrained", f.constrained,
               "rank: use the spin-constrained QMF reference");
  app.add_option("--out", f.out, "Write the report here instead of stdout");
  app.add_option("--format", f.format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--sector", f.sector,
                 "Stationary-qubit sector, e.g. \"2:-1,5:+1\"");
  app.add_option("--entanglers", f.entanglers,
                 "Entangler list file (one Pauli string per line)");
  app.add_option("--gen", f.generators, "Entangler generator (repeatable)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Flags f;
  CLI::App app{"Qubit coupled-cluster toolkit", "qcc"};
  app.require_subcommand(1);
  add_global_flags(app, f);

  auto* rank = app.add_subcommand("rank", "Screen a pool of entanglers");
  rank->add_option("--pool", f.pool, "Pool: 2q (two-qubit words) or all")
      ->check(CLI::IsMember({"2q", "all"}))
      ->capture_default_str();
  rank->add_option("--top", f.top, "delta E finalists per tier")
      ->capture_default_str();
  rank->add_option("--d1-tol", f.d1_tol, "Tier1 first-derivative threshold")
      ->capture_default_str();
  rank->add_option("--curv-tol", f.curv_tol, "Tier2 curvature threshold")
      ->capture_default_str();
  rank->add_option("--disc-tol", f.disc_tol, "Discontinuity threshold")
      ->capture_default_str();
  rank->add_option("--pole-tol", f.pole_tol, "Bloch pole tolerance (rad)")
      ->capture_default_str();

  auto* optimize =
      app.add_subcommand("optimize", "Minimize the QCC energy for a generator list");
  auto* scan = app.add_subcommand("scan", "Energy scan over a directory of files");
  scan->add_option("--dir", f.dir, "Directory of .ham files");
  auto* factorize = app.add_subcommand(
      "factorize", "Factor exp(-i t P) into two-qubit exponentials");
  factorize->add_option("words", f.words, "Pauli strings, e.g. \"Z3 Y2 Z1 X0\"");
  factorize->add_option("--nqubits", f.nqubits,
                        "Register size (default: highest qubit + 1)");
  auto* exact = app.add_subcommand("exact", "Exact diagonalization");
  exact->add_flag("--sectors", f.sectors,
                  "Also diagonalize every stationary-qubit sector");
  exact->add_flag("--spectrum", f.spectrum, "Print all eigenvalues");
  auto* taper = app.add_subcommand(
      "taper", "Reduce to a stationary-qubit sector (or list stationary qubits)");
  for (auto* sub : {rank, optimize, scan, factorize, exact, taper}) {
    sub->fallthrough();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  Session session(f, out, err);
  try {
    if (*rank) return session.rank();
    if (*optimize) return session.optimize();
    if (*scan) return session.scan();
    if (*factorize) return session.factorize();
    if (*exact) return session.exact();
    if (*taper) return session.taper();
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace qcc::cli
