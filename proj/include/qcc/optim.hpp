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

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace qcc {

/// Objective returning f(x) and writing the gradient into `grad`.
using Objective =
    std::function<double(const Eigen::VectorXd& x, Eigen::VectorXd& grad)>;

struct BfgsOptions {
  double grad_tol = 1e-8;     ///< max-norm of the gradient
  double energy_tol = 1e-10;  ///< |f_k - f_{k-1}|
  int max_iter = 2000;
  bool record_history = false;
};

struct BfgsResult {
  Eigen::VectorXd x;
  double value = 0;
  double grad_norm = 0;  ///< max-norm at x
  int iterations = 0;
  bool converged = false;
  std::vector<double> history;  ///< f after each accepted step
};

/**
 * Dense BFGS with a strong-Wolfe line search (cubic-interpolation zoom).
 *
 * Converged means grad max-norm < grad_tol together with a last step that
 * changed f by less than energy_tol. A stationary start returns immediately.
 */
BfgsResult minimize_bfgs(const Objective& f, Eigen::VectorXd x0,
                         const BfgsOptions& opts = {});

}  // namespace qcc
