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

// Python bindings for the qcc library.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcc/factor.hpp"
#include "qcc/hamio.hpp"
#include "qcc/meanfield.hpp"
#include "qcc/pauli.hpp"
#include "qcc/qcc.hpp"
#include "qcc/rank.hpp"
#include "qcc/simstate.hpp"

namespace py = pybind11;

namespace qcc {
namespace {

std::vector<std::pair<double, double>> angle_list(const BlochConfig& c) {
  std::vector<std::pair<double, double>> out;
  for (const auto& a : c.angles()) out.emplace_back(a.theta, a.phi);
  return out;
}

std::vector<PauliWord> words(const std::vector<std::string>& texts, int n) {
  std::vector<PauliWord> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(PauliWord::parse(t, n));
  return out;
}

QmfOptions qmf_options(int restarts, std::uint64_t seed, int jobs) {
  QmfOptions o;
  o.restarts = restarts;
  o.seed = seed;
  o.jobs = jobs;
  return o;
}

}  // namespace
}  // namespace qcc

PYBIND11_MODULE(_core, m) {
  using namespace qcc;
  m.doc() = "Qubit coupled-cluster core library";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<PauliWord>(m, "PauliWord")
      .def(py::init(&PauliWord::parse), py::arg("text"), py::arg("n_qubits"))
      .def_property_readonly("n_qubits", &PauliWord::n_qubits)
      .def_property_readonly("x_mask", &PauliWord::x_mask)
      .def_property_readonly("z_mask", &PauliWord::z_mask)
      .def_property_readonly("phase", &PauliWord::phase)
      .def_property_readonly("length", &PauliWord::length)
      .def_property_readonly("qubits", &PauliWord::qubits)
      .def("commutes_with", &PauliWord::commutes_with)
      .def("without_phase", &PauliWord::without_phase)
      .def("to_matrix",
           [](const PauliWord& w) { return to_matrix(w); })
      .def("__mul__", [](const PauliWord& a, const PauliWord& b) { return a * b; })
      .def("__eq__", [](const PauliWord& a, const PauliWord& b) { return a == b; })
      .def("__hash__",
           [](const PauliWord& w) {
             return py::hash(py::make_tuple(w.n_qubits(), w.x_mask(),
                                            w.z_mask(), w.phase_exponent()));
           })
      .def("__str__", &PauliWord::to_string)
      .def("__repr__", [](const PauliWord& w) {
        return "PauliWord('" + w.to_string() + "')";
      });

  py::class_<PauliSum>(m, "PauliSum")
      .def(py::init<int>(), py::arg("n_qubits"))
      .def_property_readonly("n_qubits", &PauliSum::n_qubits)
      .def("__len__", &PauliSum::size)
      .def("add",
           [](PauliSum& h, const PauliWord& w, cplx c) -> PauliSum& {
             return h.add(w, c);
           },
           py::arg("word"), py::arg("coeff") = cplx(1.0),
           py::return_value_policy::reference_internal)
      .def("coefficient", &PauliSum::coefficient)
      .def("is_hermitian", &PauliSum::is_hermitian, py::arg("tol") = 1e-12)
      .def("terms",
           [](const PauliSum& h) {
             std::vector<std::pair<std::string, cplx>> out;
             for (const auto& [k, c] : h) out.emplace_back(h.word(k).to_string(), c);
             return out;
           })
      .def("to_matrix", [](const PauliSum& h) { return to_matrix(h); })
      .def("__add__", [](const PauliSum& a, const PauliSum& b) { return a + b; })
      .def("__sub__", [](const PauliSum& a, const PauliSum& b) { return a - b; });

  m.def("commutator", &commutator);
  m.def("sum_commutator", &sum_commutator);
  m.def("similarity_transform", &similarity_transform, py::arg("h"),
        py::arg("generator"), py::arg("tau"));
  m.def("enumerate_entanglers",
        [](int n, int min_len, std::optional<int> max_len) {
          return enumerate_entanglers(n, min_len, max_len.value_or(n));
        },
        py::arg("n_qubits"),
        py::arg("min_len") = 2, py::arg("max_len") = py::none());
  m.def("entangler_count", &entangler_count);

  py::class_<ProblemInstance>(m, "Problem")
      .def_readonly("n_qubits", &ProblemInstance::n_qubits)
      .def_readonly("hamiltonian", &ProblemInstance::hamiltonian)
      .def_readonly("number_op", &ProblemInstance::number_op)
      .def_readonly("spin_sq_op", &ProblemInstance::spin_sq_op)
      .def_readonly("geometry_tag", &ProblemInstance::geometry_tag)
      .def_property_readonly("bond_length", &ProblemInstance::bond_length)
      .def("serialize", &serialize_problem);
  m.def("parse_problem", [](const std::string& t) { return parse_problem(t); });
  m.def("read_problem", &read_problem_file, py::arg("path"));
  m.def("stationary_qubits", &find_stationary_qubits);
  m.def("reduce", [](const ProblemInstance& p, const std::string& sector) {
    return reduce_problem(p, SectorSpec::parse(sector));
  }, py::arg("problem"), py::arg("sector"));
  m.def("format_number", &format_number);

  m.def("exact_ground",
        [](const PauliSum& h) {
          const SpectrumResult r = exact_ground(h, false);
          return py::make_tuple(r.ground_energy, r.eigenvalues);
        },
        "Ground energy and ascending spectrum.");

  py::class_<QmfResult>(m, "QmfResult")
      .def_readonly("energy", &QmfResult::energy)
      .def_readonly("objective", &QmfResult::objective)
      .def_readonly("constrained", &QmfResult::constrained)
      .def_readonly("spin_expectation", &QmfResult::spin_expectation)
      .def_readonly("number_expectation", &QmfResult::number_expectation)
      .def_readonly("converged", &QmfResult::converged)
      .def_property_readonly("angles",
                             [](const QmfResult& r) { return angle_list(r.config); });
  m.def("qmf",
        [](const ProblemInstance& p, bool constrained, double penalty,
           int restarts, std::uint64_t seed, int jobs) {
          const QmfOptions o = qmf_options(restarts, seed, jobs);
          return constrained ? qmf_minimize_constrained(p, penalty, o)
                             : qmf_minimize(p, o);
        },
        py::arg("problem"), py::arg("constrained") = false,
        py::arg("penalty") = kDefaultPenalty, py::arg("restarts") = 32,
        py::arg("seed") = kDefaultSeed, py::arg("jobs") = 1);

  py::class_<QccResult>(m, "QccResult")
      .def_readonly("energy", &QccResult::energy)
      .def_readonly("amplitudes", &QccResult::amplitudes)
      .def_readonly("spin_expectation", &QccResult::spin_expectation)
      .def_readonly("converged", &QccResult::converged)
      .def_readonly("parameter_count", &QccResult::parameter_count)
      .def_readonly("qmf_energy", &QccResult::qmf_energy)
      .def_readonly("history", &QccResult::history)
      .def_property_readonly("angles",
                             [](const QccResult& r) { return angle_list(r.config); });
  m.def("qcc_minimize",
        [](const ProblemInstance& p, const std::vector<std::string>& gens,
           int restarts, std::uint64_t seed, int jobs) {
          QccOptions o;
          o.qmf = qmf_options(restarts, seed, 1);
          o.jobs = jobs;
          return qcc_minimize(p, words(gens, p.n_qubits), o);
        },
        py::arg("problem"), py::arg("generators"), py::arg("restarts") = 32,
        py::arg("seed") = kDefaultSeed, py::arg("jobs") = 1);

  py::class_<EntanglerScore>(m, "EntanglerScore")
      .def_readonly("generator", &EntanglerScore::generator)
      .def_readonly("first_derivative", &EntanglerScore::first_derivative)
      .def_readonly("second_derivative", &EntanglerScore::second_derivative)
      .def_readonly("delta_e", &EntanglerScore::delta_e)
      .def_readonly("delta_e_tau", &EntanglerScore::delta_e_tau)
      .def_readonly("discontinuity_flag", &EntanglerScore::discontinuity_flag)
      .def_property_readonly("tier",
                             [](const EntanglerScore& s) { return tier_name(s.tier); });
  py::class_<RankReport>(m, "RankReport")
      .def_readonly("reference", &RankReport::reference)
      .def_readonly("scores", &RankReport::scores)
      .def("csv", &format_rank_csv);
  m.def("screen",
        [](const ProblemInstance& p, std::optional<std::vector<std::string>> pool,
           bool constrained, int top_k, int jobs) {
          RankOptions o;
          o.constrained = constrained;
          o.top_k = top_k;
          o.jobs = jobs;
          const auto gens = pool ? words(*pool, p.n_qubits)
                                 : enumerate_entanglers(p.n_qubits, 2, p.n_qubits);
          return screen(p, gens, o);
        },
        py::arg("problem"), py::arg("pool") = py::none(),
        py::arg("constrained") = false, py::arg("top_k") = 20,
        py::arg("jobs") = 1);

  py::class_<FactorizedExp>(m, "Factorization")
      .def_readonly("word", &FactorizedExp::word)
      .def_property_readonly("two_qubit_count", &FactorizedExp::two_qubit_count)
      .def_property_readonly("variable_count", &FactorizedExp::variable_count)
      .def_property_readonly(
          "factors",
          [](const FactorizedExp& f) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& x : f.factors) {
              out.emplace_back(x.generator.to_string(),
                               x.kind == FactorKind::Variable    ? "t"
                               : x.kind == FactorKind::FixedPlus ? "+pi/4"
                                                                 : "-pi/4");
            }
            return out;
          })
      .def("matrix", &factorized_matrix, py::arg("t"))
      .def("__str__", &format_factorization);
  m.def("factorize", &factorize);
}
