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

#include "qcc/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qcc {

namespace {

constexpr double kC1 = 1e-4;
constexpr double kC2 = 0.9;
constexpr int kMaxLineEvals = 40;

struct Point {
  double alpha;
  double f;
  double slope;  // directional derivative
};

// Minimizer of the cubic through (a, fa, da) and (b, fb, db), clamped into
// the interior of [a, b]; falls back to bisection.
double cubic_step(const Point& a, const Point& b) {
  const double d1 = a.slope + b.slope - 3 * (a.f - b.f) / (a.alpha - b.alpha);
  const double disc = d1 * d1 - a.slope * b.slope;
  const double lo = std::min(a.alpha, b.alpha), hi = std::max(a.alpha, b.alpha);
  const double mid = 0.5 * (a.alpha + b.alpha);
  if (disc < 0) return mid;
  const double d2 = std::copysign(std::sqrt(disc), b.alpha - a.alpha);
  const double denom = b.slope - a.slope + 2 * d2;
  if (denom == 0) return mid;
  const double t =
      b.alpha - (b.alpha - a.alpha) * (b.slope + d2 - d1) / denom;
  const double margin = 0.1 * (hi - lo);
  if (!std::isfinite(t) || t < lo + margin || t > hi - margin) return mid;
  return t;
}

class LineSearch {
 public:
  LineSearch(const Objective& f, const Eigen::VectorXd& x,
             const Eigen::VectorXd& dir)
      : f_(f), x_(x), dir_(dir) {}

  // Returns true with the accepted point stored in x_new/f_new/g_new.
  bool run(double f0, double slope0, double alpha1) {
    const Point zero{0, f0, slope0};
    Point prev = zero;
    double alpha = alpha1;
    for (int i = 0; i < kMaxLineEvals; ++i) {
      const Point cur = eval(alpha);
      if (!std::isfinite(cur.f)) {
        alpha *= 0.5;
        continue;
      }
      if (cur.f > f0 + kC1 * alpha * slope0 || (i > 0 && cur.f >= prev.f)) {
        return zoom(zero, prev, cur);
      }
      if (std::abs(cur.slope) <= -kC2 * slope0) return true;
      if (cur.slope >= 0) return zoom(zero, cur, prev);
      prev = cur;
      alpha *= 2;
    }
    return false;
  }

  Eigen::VectorXd x_new, g_new;
  double f_new = 0;

 private:
  Point eval(double alpha) {
    x_new = x_ + alpha * dir_;
    g_new.resize(x_.size());
    f_new = f_(x_new, g_new);
    ++evals_;
    return {alpha, f_new, g_new.dot(dir_)};
  }

  bool zoom(const Point& zero, Point lo, Point hi) {
    for (int i = 0; i < kMaxLineEvals && evals_ < 3 * kMaxLineEvals; ++i) {
      if (std::abs(hi.alpha - lo.alpha) < 1e-16 * std::max(1.0, lo.alpha)) {
        break;
      }
      const Point cur = eval(cubic_step(lo, hi));
      if (cur.f > zero.f + kC1 * cur.alpha * zero.slope || cur.f >= lo.f) {
        hi = cur;
      } else {
        if (std::abs(cur.slope) <= -kC2 * zero.slope) return true;
        if (cur.slope * (hi.alpha - lo.alpha) >= 0) hi = lo;
        lo = cur;
      }
    }
    // Accept the best sufficient-decrease point found, if any.
    if (lo.alpha > 0 && lo.f < zero.f) {
      eval(lo.alpha);
      return true;
    }
    return false;
  }

  const Objective& f_;
  const Eigen::VectorXd& x_;
  const Eigen::VectorXd& dir_;
  int evals_ = 0;
};

}  // namespace

BfgsResult minimize_bfgs(const Objective& f, Eigen::VectorXd x0,
                         const BfgsOptions& opts) {
  const Eigen::Index n = x0.size();
  BfgsResult res;
  res.x = std::move(x0);
  Eigen::VectorXd g(n);
  res.value = f(res.x, g);
  res.grad_norm = n ? g.lpNorm<Eigen::Infinity>() : 0.0;
  if (res.grad_norm < opts.grad_tol) {
    res.converged = true;
    return res;
  }

  Eigen::MatrixXd inv_h = Eigen::MatrixXd::Identity(n, n);
  bool scaled = false;
  bool just_reset = false;
  for (int it = 0; it < opts.max_iter; ++it) {
    Eigen::VectorXd dir = -inv_h * g;
    double slope = g.dot(dir);
    if (!(slope < 0)) {
      inv_h.setIdentity();
      dir = -g;
      slope = g.dot(dir);
    }
    const double alpha1 =
        scaled ? 1.0 : std::min(1.0, 1.0 / g.lpNorm<Eigen::Infinity>());

    LineSearch ls(f, res.x, dir);
    if (!ls.run(res.value, slope, alpha1)) {
      if (just_reset) break;
      inv_h.setIdentity();
      scaled = false;
      just_reset = true;
      continue;
    }
    just_reset = false;

    const Eigen::VectorXd s = ls.x_new - res.x;
    const Eigen::VectorXd y = ls.g_new - g;
    const double df = res.value - ls.f_new;
    res.x = ls.x_new;
    res.value = ls.f_new;
    g = ls.g_new;
    res.grad_norm = g.lpNorm<Eigen::Infinity>();
    res.iterations = it + 1;
    if (opts.record_history) res.history.push_back(res.value);

    if (res.grad_norm < opts.grad_tol && std::abs(df) < opts.energy_tol) {
      res.converged = true;
      return res;
    }

    const double sy = s.dot(y);
    if (sy > std::numeric_limits<double>::epsilon() * s.norm() * y.norm()) {
      if (!scaled) {
        inv_h *= sy / y.squaredNorm();
        scaled = true;
      }
      const double rho = 1.0 / sy;
      const Eigen::VectorXd hy = inv_h * y;
      inv_h += (rho * rho * y.dot(hy) + rho) * s * s.transpose() -
               rho * (hy * s.transpose() + s * hy.transpose());
    }
  }
  res.converged = res.grad_norm < opts.grad_tol;
  return res;
}

}  // namespace qcc
