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
#include "esvc/nlp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "esvc/error.hpp"

namespace esvc {

VecX numeric_gradient(const std::function<double(const VecX&)>& f,
                      const VecX& x, double step) {
  VecX g(x.size());
  VecX xp = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double h = step * std::max(1.0, std::abs(x[i]));
    xp[i] = x[i] + h;
    const double fp = f(xp);
    xp[i] = x[i] - h;
    const double fm = f(xp);
    xp[i] = x[i];
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

VecX minimize_bfgs(const std::function<double(const VecX&)>& f, VecX x,
                   double grad_tol, int max_iter, double fd_step,
                   double* grad_norm) {
  const auto n = x.size();
  Eigen::MatrixXd H = Eigen::MatrixXd::Identity(n, n);
  double fx = f(x);
  VecX g = numeric_gradient(f, x, fd_step);
  for (int it = 0; it < max_iter; ++it) {
    if (!std::isfinite(fx) || g.lpNorm<Eigen::Infinity>() < grad_tol) break;
    VecX dir = -H * g;
    double slope = g.dot(dir);
    if (slope >= 0.0) {
      // Lost descent; restart from steepest descent.
      H.setIdentity();
      dir = -g;
      slope = -g.squaredNorm();
    }
    double step = 1.0;
    VecX xn;
    double fn = std::numeric_limits<double>::infinity();
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      xn = x + step * dir;
      fn = f(xn);
      if (std::isfinite(fn) && fn <= fx + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    const VecX gn = numeric_gradient(f, xn, fd_step);
    const VecX s = xn - x;
    const VecX y = gn - g;
    const double sy = s.dot(y);
    if (sy > 1e-16 * s.norm() * y.norm()) {
      const double rho = 1.0 / sy;
      const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
      H = (I - rho * s * y.transpose()) * H * (I - rho * y * s.transpose()) +
          rho * s * s.transpose();
    }
    const bool stalled = std::abs(fx - fn) <= 1e-16 * std::max(1.0, std::abs(fx));
    x = xn;
    fx = fn;
    g = gn;
    if (stalled) break;
  }
  if (grad_norm) *grad_norm = g.lpNorm<Eigen::Infinity>();
  return x;
}

namespace {

double violation(const VecX& c, const VecX& g) {
  double v = c.size() ? c.lpNorm<Eigen::Infinity>() : 0.0;
  for (Eigen::Index i = 0; i < g.size(); ++i) v = std::max(v, g[i]);
  return v;
}

}  // namespace

AlResult solve_augmented_lagrangian(const NlpProblem& p, const VecX& x0,
                                    const AlOptions& opt) {
  require(p.n == x0.size(), "augmented Lagrangian: dimension mismatch");
  const VecX c0 = p.equalities(x0);
  const VecX g0 = p.inequalities(x0);
  VecX lam = VecX::Zero(c0.size());
  VecX nu = VecX::Zero(g0.size());
  double mu = opt.mu0;
  double prev_viol = violation(c0, g0);

  AlResult res;
  res.x = x0;
  for (int outer = 1; outer <= opt.max_outer; ++outer) {
    auto merit = [&](const VecX& x) {
      const VecX c = p.equalities(x);
      const VecX g = p.inequalities(x);
      double v = p.objective(x) + lam.dot(c) + 0.5 * mu * c.squaredNorm();
      for (Eigen::Index i = 0; i < g.size(); ++i) {
        const double t = std::max(0.0, nu[i] + mu * g[i]);
        v += (t * t - nu[i] * nu[i]) / (2.0 * mu);
      }
      return v;
    };
    double gnorm = 0.0;
    const VecX x_prev = res.x;
    res.x = minimize_bfgs(merit, res.x, opt.grad_tol, opt.max_inner,
                          opt.fd_step, &gnorm);
    const double moved = (res.x - x_prev).lpNorm<Eigen::Infinity>() /
                         std::max(1.0, x_prev.lpNorm<Eigen::Infinity>());
    res.kkt_residual = gnorm;
    res.outer_iterations = outer;

    const VecX c = p.equalities(res.x);
    const VecX g = p.inequalities(res.x);
    const double viol = violation(c, g);
    lam += mu * c;
    for (Eigen::Index i = 0; i < g.size(); ++i) {
      nu[i] = std::max(0.0, nu[i] + mu * g[i]);
    }
    res.max_violation = viol;
    res.objective = p.objective(res.x);
    if (viol <= opt.feas_tol &&
        (gnorm <= std::sqrt(opt.grad_tol) || moved <= 1e-10)) {
      res.status = AlStatus::Converged;
      return res;
    }
    if (viol > opt.feas_tol && viol > 0.25 * prev_viol) mu *= 10.0;
    prev_viol = std::min(prev_viol, viol);
    if (mu > opt.mu_max) {
      res.status = AlStatus::PenaltyLimit;
      return res;
    }
  }
  res.status = AlStatus::IterationCap;
  return res;
}

}  // namespace esvc
