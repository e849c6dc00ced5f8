// Copyright 2026 The qintrinsic Authors
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

#ifndef QINTRINSIC_OPTIM_H_
#define QINTRINSIC_OPTIM_H_

#include <functional>

#include <Eigen/Dense>

namespace qintrinsic {

/// f(x) returning the value and, when `grad` is non-null, the gradient.
using GradientObjective = std::function<double(const Eigen::VectorXd &x, Eigen::VectorXd *grad)>;
using Objective = std::function<double(const Eigen::VectorXd &x)>;

struct MinimizeResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct LbfgsOptions {
  int max_iterations = 2000;
  int history = 8;
  double gradient_tol = 1e-9;
  /// Stop when the relative decrease stays below this for a few iterations.
  double value_tol = 1e-12;
};

/// Limited-memory BFGS with Armijo backtracking.
MinimizeResult lbfgs(const GradientObjective &f, Eigen::VectorXd x0, const LbfgsOptions &opts = {});

struct NelderMeadOptions {
  int max_evaluations = 2000;
  double initial_step = 0.25;
  /// Stop when the simplex value spread falls below this.
  double tol = 1e-10;
};

MinimizeResult nelder_mead(const Objective &f, const Eigen::VectorXd &x0, const NelderMeadOptions &opts = {});

}  // namespace qintrinsic

#endif  // QINTRINSIC_OPTIM_H_
