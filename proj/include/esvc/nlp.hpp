/*
 * Copyright 2026 The ESVC Foot Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <functional>

#include <Eigen/Core>

namespace esvc {

using VecX = Eigen::VectorXd;

/// Small dense NLP: minimize f(x) s.t. c(x) = 0, g(x) <= 0.
struct NlpProblem {
  int n = 0;
  std::function<double(const VecX&)> objective;
  std::function<VecX(const VecX&)> equalities;
  std::function<VecX(const VecX&)> inequalities;
};

struct AlOptions {
  double feas_tol = 1e-10;
  double grad_tol = 1e-9;
  double mu0 = 10.0;
  double mu_max = 1e10;
  int max_outer = 60;
  int max_inner = 400;
  double fd_step = 1e-7;
};

enum class AlStatus { Converged, PenaltyLimit, IterationCap };

struct AlResult {
  VecX x;
  double objective = 0.0;
  double max_violation = 0.0;
  double kkt_residual = 0.0;  ///< inf-norm of the final Lagrangian gradient
  AlStatus status = AlStatus::IterationCap;
  int outer_iterations = 0;
};

/// Central-difference gradient.
VecX numeric_gradient(const std::function<double(const VecX&)>& f,
                      const VecX& x, double step);

/// BFGS with Armijo backtracking on finite-difference gradients. Returns the
/// final iterate; `grad_norm` receives the inf-norm of its gradient.
VecX minimize_bfgs(const std::function<double(const VecX&)>& f, VecX x,
                   double grad_tol, int max_iter, double fd_step,
                   double* grad_norm = nullptr);

/// Powell-Hestenes-Rockafellar augmented Lagrangian.
AlResult solve_augmented_lagrangian(const NlpProblem& p, const VecX& x0,
                                    const AlOptions& opt = {});

}  // namespace esvc
