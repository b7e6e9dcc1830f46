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

#include "qcc/rank.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "qcc/optim.hpp"
#include "qcc/parallel.hpp"

namespace qcc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kMinusHalfI{0, -0.5};
constexpr double kPoleNudge = 0.01;

using Spinor = std::array<cplx, 2>;
using Spinors = std::vector<Spinor>;

// Spinors of omega differentiated by the listed flat parameter indices.
Spinors differentiated(const BlochConfig& omega, std::initializer_list<int> params) {
  const int n = omega.n_qubits();
  std::vector<int> dt(n, 0), dp(n, 0);
  for (int i : params) (i % 2 == 0 ? dt : dp)[i / 2]++;
  Spinors out(n);
  for (int q = 0; q < n; ++q) out[q] = spinor_derivative(omega[q], dt[q], dp[q]);
  return out;
}

// <bra| h |ket> for product states given by per-qubit spinors.
cplx transition(const PauliSum& h, const Spinors& bra, const Spinors& ket) {
  const std::size_t n = bra.size();
  // m[q] = <bra_q| {I, X, Y, Z} |ket_q>
  std::vector<std::array<cplx, 4>> m(n);
  for (std::size_t q = 0; q < n; ++q) {
    const cplx a0 = std::conj(bra[q][0]), a1 = std::conj(bra[q][1]);
    const cplx b0 = ket[q][0], b1 = ket[q][1];
    m[q] = {a0 * b0 + a1 * b1, a0 * b1 + a1 * b0,
            cplx(0, -1) * a0 * b1 + cplx(0, 1) * a1 * b0, a0 * b0 - a1 * b1};
  }
  cplx total = 0;
  for (const auto& [key, c] : h) {
    cplx prod = c;
    for (std::size_t q = 0; q < n; ++q) {
      const bool x = (key.x >> q) & 1, z = (key.z >> q) & 1;
      prod *= m[q][x ? (z ? 2 : 1) : (z ? 3 : 0)];
    }
    total += prod;
  }
  return total;
}

PauliSum generator_gradient(const PauliSum& h, const PauliWord& p) {
  return sum_commutator(h, p) * kMinusHalfI;
}

// (1/2) P [H, P]
PauliSum generator_curvature(const PauliSum& h, const PauliWord& p) {
  return p * sum_commutator(h, p) * cplx(0.5, 0);
}

bool on_pole(double theta, double tol) {
  return theta < tol || theta > kPi - tol;
}

QmfOptions inner_qmf(const RankOptions& opts) {
  QmfOptions q = opts.qmf;
  q.jobs = 1;
  return q;
}

// E(tau, Omega) = <A> + sin(tau) <B> + (1 - cos(tau)) <C> with A = H,
// B = -(i/2)[H, P], C = (1/2) P [H, P]; parameters are angles then tau.
struct SingleEntanglerEnergy {
  PauliSum a, b, c;

  double operator()(const Eigen::VectorXd& x, Eigen::VectorXd& grad) const {
    const Eigen::Index na = x.size() - 1;
    const Eigen::VectorXd ang = x.head(na);
    const double tau = x(na), s = std::sin(tau), co = std::cos(tau);
    Eigen::VectorXd ga, gb, gc;
    const double ea = coherent_energy_and_gradient(a, ang, ga);
    const double eb = coherent_energy_and_gradient(b, ang, gb);
    const double ec = coherent_energy_and_gradient(c, ang, gc);
    grad.resize(x.size());
    grad.head(na) = ga + s * gb + (1 - co) * gc;
    grad(na) = co * eb + s * ec;
    return ea + s * eb + (1 - co) * ec;
  }
};

int tier_rank(Tier t) { return static_cast<int>(t); }

double tier_score(const EntanglerScore& s) {
  if (s.tier == Tier::Tier1) return std::abs(s.first_derivative);
  return s.second_derivative ? std::abs(*s.second_derivative) : 0.0;
}

}  // namespace

std::string tier_name(Tier t) {
  switch (t) {
    case Tier::Tier1:
      return "Tier1";
    case Tier::Tier2:
      return "Tier2";
    case Tier::Discarded:
      return "Discarded";
  }
  return "?";
}

bool generator_less(const PauliWord& a, const PauliWord& b) {
  for (int q = std::max(a.n_qubits(), b.n_qubits()) - 1; q >= 0; --q) {
    const auto code = [q](const PauliWord& w) {
      const auto ax = q < w.n_qubits() ? w.axis(q) : std::nullopt;
      return ax ? static_cast<int>(*ax) + 1 : 0;
    };
    const int ca = code(a), cb = code(b);
    if (ca != cb) return ca < cb;
  }
  return false;
}

PauliSum reference_objective(const ProblemInstance& problem,
                             const QmfResult& qmf) {
  PauliSum k = problem.hamiltonian;
  if (qmf.constrained && qmf.penalty_weight != 0) {
    if (!problem.spin_sq_op) {
      throw InputError("constrained reference without an S^2 operator");
    }
    k.add(*problem.spin_sq_op, qmf.penalty_weight);
  }
  return k;
}

double first_derivative(const ProblemInstance& problem,
                        const PauliWord& generator, const QmfResult& qmf) {
  return coherent_expectation(
      generator_gradient(problem.hamiltonian, generator), qmf.config);
}

RelaxationData relaxation_data(const ProblemInstance& problem,
                               const PauliWord& generator, const QmfResult& qmf,
                               const RankOptions& opts) {
  const BlochConfig& omega = qmf.config;
  const int np = 2 * omega.n_qubits();
  const PauliSum g = generator_gradient(problem.hamiltonian, generator);
  const PauliSum k = reference_objective(problem, qmf);
  const Spinors ket = differentiated(omega, {});

  RelaxationData out;
  out.c_vector.resize(np);
  std::vector<Spinors> first(np);
  for (int i = 0; i < np; ++i) {
    first[i] = differentiated(omega, {i});
    out.c_vector(i) = 2 * transition(g, first[i], ket).real();
  }
  out.d_matrix.resize(np, np);
  for (int i = 0; i < np; ++i) {
    for (int j = i; j < np; ++j) {
      const cplx v = transition(k, differentiated(omega, {i, j}), ket) +
                     transition(k, first[i], first[j]);
      out.d_matrix(i, j) = out.d_matrix(j, i) = 2 * v.real();
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(out.d_matrix);
  out.pseudo_inverse_rank = static_cast<int>(
      (es.eigenvalues().array().abs() > opts.pinv_cutoff).count());
  return out;
}

// <C> - c^T D^+ c at `qmf` as given (no pole handling).
static double relaxed_curvature(const ProblemInstance& problem,
                         const PauliWord& generator, const QmfResult& qmf,
                         const RankOptions& opts) {
  const double a = coherent_expectation(
      generator_curvature(problem.hamiltonian, generator), qmf.config);
  const RelaxationData rd = relaxation_data(problem, generator, qmf, opts);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rd.d_matrix);
  const Eigen::VectorXd proj = es.eigenvectors().transpose() * rd.c_vector;
  double correction = 0;
  for (Eigen::Index i = 0; i < proj.size(); ++i) {
    const double lambda = es.eigenvalues()(i);
    if (std::abs(lambda) > opts.pinv_cutoff) {
      correction += proj(i) * proj(i) / lambda;
    }
  }
  return a - correction;
}

QmfResult resolve_degenerate_angles(const ProblemInstance& problem,
                                    const PauliWord& generator,
                                    const QmfResult& qmf,
                                    const RankOptions& opts) {
  const int n = qmf.config.n_qubits();
  std::vector<int> poles;
  for (int q = 0; q < n; ++q) {
    if (on_pole(qmf.config[q].theta, opts.pole_tol)) poles.push_back(q);
  }
  if (poles.empty()) return qmf;

  PauliSum objective =
      similarity_transform(problem.hamiltonian, generator, opts.probe_tau);
  if (qmf.constrained && qmf.penalty_weight != 0) {
    objective.add(*problem.spin_sq_op, qmf.penalty_weight);
  }
  const QmfOptions local = inner_qmf(opts);
  std::optional<QmfResult> best;
  for (double phi0 : {0.0, kPi / 2, kPi, 3 * kPi / 2}) {
    BlochConfig start = qmf.config;
    for (int q : poles) {
      start[q].theta = start[q].theta < kPi / 2 ? kPoleNudge : kPi - kPoleNudge;
      start[q].phi = phi0;
    }
    QmfResult r = minimize_coherent_local(objective, start, local);
    if (!best || r.objective < best->objective - 1e-15) best = std::move(r);
  }

  QmfResult out = qmf;
  for (int q : poles) {
    out.config[q].theta = qmf.config[q].theta < kPi / 2 ? 0.0 : kPi;
    out.config[q].phi = best->config[q].phi;
  }

  // At probe_tau the pole displacement is O(tau), so the energy is nearly
  // flat in phi and the re-optimized azimuths are only roughly pinned.
  // Polish them on the tau -> 0 limit of the same minimization: the relaxed
  // curvature as a function of the pole azimuths.
  const auto curvature = [&](const Eigen::VectorXd& phi) {
    QmfResult r = out;
    for (std::size_t k = 0; k < poles.size(); ++k) {
      r.config[poles[k]].phi = phi(static_cast<Eigen::Index>(k));
    }
    return relaxed_curvature(problem, generator, r, opts);
  };
  const Objective f = [&](const Eigen::VectorXd& phi, Eigen::VectorXd& grad) {
    constexpr double h = 1e-6;
    grad.resize(phi.size());
    for (Eigen::Index k = 0; k < phi.size(); ++k) {
      Eigen::VectorXd p = phi, m = phi;
      p(k) += h;
      m(k) -= h;
      grad(k) = (curvature(p) - curvature(m)) / (2 * h);
    }
    return curvature(phi);
  };
  Eigen::VectorXd phi0(static_cast<Eigen::Index>(poles.size()));
  for (std::size_t k = 0; k < poles.size(); ++k) {
    phi0(static_cast<Eigen::Index>(k)) = out.config[poles[k]].phi;
  }
  BfgsOptions bo;
  bo.grad_tol = 1e-9;
  bo.energy_tol = 1e-14;
  bo.max_iter = 200;
  const BfgsResult polished = minimize_bfgs(f, phi0, bo);
  if (polished.value < curvature(phi0)) {
    for (std::size_t k = 0; k < poles.size(); ++k) {
      out.config[poles[k]].phi = std::remainder(
          polished.x(static_cast<Eigen::Index>(k)), 2 * kPi);
      if (out.config[poles[k]].phi < 0) out.config[poles[k]].phi += 2 * kPi;
    }
  }
  return out;
}

DiscontinuityResult discontinuity_test(const ProblemInstance& problem,
                                       const PauliWord& generator,
                                       const QmfResult& qmf,
                                       const RankOptions& opts) {
  DiscontinuityResult out;
  out.d_zero = first_derivative(problem, generator, qmf);
  QmfOptions global = inner_qmf(opts);
  global.extra_starts = {qmf.config};
  for (double sign : {1.0, -1.0}) {
    const PauliSum ht =
        similarity_transform(problem.hamiltonian, generator, sign * opts.probe_tau);
    PauliSum objective = ht;
    if (qmf.constrained && qmf.penalty_weight != 0) {
      objective.add(*problem.spin_sq_op, qmf.penalty_weight);
    }
    const QmfResult r = minimize_coherent(objective, global);
    const double d =
        coherent_expectation(generator_gradient(ht, generator), r.config);
    (sign > 0 ? out.d_plus : out.d_minus) = d;
  }
  out.measure = std::abs(out.d_plus + out.d_minus - 2 * out.d_zero) / 2;
  out.discontinuous = out.measure > opts.disc_tol;
  return out;
}

double second_derivative_unchecked(const ProblemInstance& problem,
                                   const PauliWord& generator,
                                   const QmfResult& qmf,
                                   const RankOptions& opts) {
  const QmfResult ref = resolve_degenerate_angles(problem, generator, qmf, opts);
  return relaxed_curvature(problem, generator, ref, opts);
}

std::optional<double> second_derivative(const ProblemInstance& problem,
                                        const PauliWord& generator,
                                        const QmfResult& qmf,
                                        const RankOptions& opts) {
  if (discontinuity_test(problem, generator, qmf, opts).discontinuous) {
    return std::nullopt;
  }
  return second_derivative_unchecked(problem, generator, qmf, opts);
}

DeltaEResult delta_e(const ProblemInstance& problem, const PauliWord& generator,
                     const QmfResult& reference, const RankOptions& opts) {
  const PauliSum& h = problem.hamiltonian;
  const SingleEntanglerEnergy energy{h, generator_gradient(h, generator),
                                     generator_curvature(h, generator)};
  const Objective f = [&energy](const Eigen::VectorXd& x, Eigen::VectorXd& g) {
    return energy(x, g);
  };
  BfgsOptions bo;
  bo.grad_tol = opts.qmf.grad_tol;
  bo.energy_tol = opts.qmf.energy_tol;
  bo.max_iter = opts.qmf.max_iter;

  // On a pole the (tau, Omega) landscape can be stationary along the
  // reference angles, so pole qubits are also started slightly off the pole
  // in four azimuthal directions.
  std::vector<Eigen::VectorXd> angle_starts{reference.config.flat()};
  std::vector<int> poles;
  for (int q = 0; q < reference.config.n_qubits(); ++q) {
    if (on_pole(reference.config[q].theta, opts.pole_tol)) poles.push_back(q);
  }
  if (!poles.empty()) {
    for (double phi0 : {0.0, kPi / 2, kPi, 3 * kPi / 2}) {
      BlochConfig c = reference.config;
      for (int q : poles) {
        c[q].theta = c[q].theta < kPi / 2 ? kPoleNudge : kPi - kPoleNudge;
        c[q].phi = phi0;
      }
      angle_starts.push_back(c.flat());
    }
  }

  const Eigen::Index na = angle_starts.front().size();
  std::optional<BfgsResult> best;
  for (const auto& angles : angle_starts) {
    for (double tau0 : opts.delta_e_starts) {
      Eigen::VectorXd x0(na + 1);
      x0 << angles, tau0;
      BfgsResult r = minimize_bfgs(f, x0, bo);
      if (!best || r.value < best->value - 1e-12) best = std::move(r);
    }
  }
  DeltaEResult out;
  if (!best) {
    out.config = reference.config;
    return out;
  }
  out.delta_e = best->value - reference.energy;
  out.tau = std::remainder(best->x(na), 4 * kPi);
  out.config = BlochConfig::from_flat(best->x.head(na)).normalize();
  out.converged = best->converged;
  return out;
}

EntanglerScore score_entangler(const ProblemInstance& problem,
                               const PauliWord& generator,
                               const QmfResult& reference,
                               const RankOptions& opts) {
  EntanglerScore s;
  s.generator = generator;
  s.constrained_reference = reference.constrained;
  s.first_derivative = first_derivative(problem, generator, reference);
  const auto disc = discontinuity_test(problem, generator, reference, opts);
  s.discontinuity_flag = disc.discontinuous;
  if (!disc.discontinuous) {
    s.second_derivative =
        second_derivative_unchecked(problem, generator, reference, opts);
  }
  for (const auto& a : reference.config.angles()) {
    if (on_pole(a.theta, opts.pole_tol)) s.pole_resolved = true;
  }
  if (std::abs(s.first_derivative) > opts.grad_tol) {
    s.tier = Tier::Tier1;
  } else if (s.second_derivative && *s.second_derivative < -opts.curv_tol) {
    s.tier = Tier::Tier2;
  } else {
    s.tier = Tier::Discarded;
  }
  return s;
}

RankReport screen(const ProblemInstance& problem,
                  const std::vector<PauliWord>& pool, const RankOptions& opts) {
  const QmfResult reference =
      opts.constrained
          ? qmf_minimize_constrained(problem, opts.penalty, opts.qmf)
          : qmf_minimize(problem, opts.qmf);
  return screen(problem, pool, reference, opts);
}

RankReport screen(const ProblemInstance& problem,
                  const std::vector<PauliWord>& pool,
                  const QmfResult& reference, const RankOptions& opts) {
  RankReport report;
  report.reference = reference;
  report.options = opts;
  auto& scores = report.scores;
  scores.resize(pool.size());
  parallel_for(pool.size(), opts.jobs, [&](std::size_t i) {
    scores[i] = score_entangler(problem, pool[i], reference, opts);
  });

  // Finalists: top_k per tier by |d1| (Tier1) or |d2| (Tier2).
  std::vector<std::size_t> finalists;
  for (Tier tier : {Tier::Tier1, Tier::Tier2}) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < scores.size(); ++i) {
      if (scores[i].tier == tier) idx.push_back(i);
    }
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      const double sa = tier_score(scores[a]), sb = tier_score(scores[b]);
      if (sa != sb) return sa > sb;
      return generator_less(scores[a].generator, scores[b].generator);
    });
    if (static_cast<int>(idx.size()) > opts.top_k) idx.resize(opts.top_k);
    finalists.insert(finalists.end(), idx.begin(), idx.end());
  }
  parallel_for(finalists.size(), opts.jobs, [&](std::size_t j) {
    auto& s = scores[finalists[j]];
    const DeltaEResult de = delta_e(problem, s.generator, reference, opts);
    s.delta_e = de.delta_e;
    s.delta_e_tau = de.tau;
    s.delta_e_converged = de.converged;
  });

  std::stable_sort(scores.begin(), scores.end(),
                   [](const EntanglerScore& a, const EntanglerScore& b) {
                     if (a.tier != b.tier) return tier_rank(a.tier) < tier_rank(b.tier);
                     if (a.delta_e.has_value() != b.delta_e.has_value()) {
                       return a.delta_e.has_value();
                     }
                     if (a.delta_e && *a.delta_e != *b.delta_e) {
                       return *a.delta_e < *b.delta_e;
                     }
                     const double sa = tier_score(a), sb = tier_score(b);
                     if (sa != sb) return sa > sb;
                     return generator_less(a.generator, b.generator);
                   });
  return report;
}

std::string format_rank_csv(const RankReport& report) {
  std::ostringstream os;
  os << "generator,tier,d1,d2,delta_e,flags\n";
  for (const auto& s : report.scores) {
    std::vector<std::string> flags;
    if (s.discontinuity_flag) flags.emplace_back("discontinuous");
    if (s.constrained_reference) flags.emplace_back("constrained");
    if (s.pole_resolved) flags.emplace_back("pole_resolved");
    if (!s.delta_e_converged) flags.emplace_back("not_converged");
    std::string joined;
    for (const auto& f : flags) joined += (joined.empty() ? "" : ";") + f;
    os << s.generator.to_string() << ',' << tier_name(s.tier) << ','
       << format_number(s.first_derivative) << ','
       << (s.second_derivative ? format_number(*s.second_derivative) : "")
       << ',' << (s.delta_e ? format_number(*s.delta_e) : "") << ',' << joined
       << '\n';
  }
  return os.str();
}

}  // namespace qcc
