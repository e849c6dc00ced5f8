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

#include "qintrinsic/optim.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <vector>

namespace qintrinsic {

MinimizeResult lbfgs(const GradientObjective &f, Eigen::VectorXd x0, const LbfgsOptions &opts) {
  MinimizeResult res;
  const Eigen::Index n = x0.size();
  Eigen::VectorXd x = std::move(x0);
  Eigen::VectorXd g(n);
  double fx = f(x, &g);
  std::deque<Eigen::VectorXd> s_hist, y_hist;
  std::deque<double> rho_hist;
  int flat = 0;
  double step_hint = 1.0 / std::max(1.0, g.norm());

  for (res.iterations = 0; res.iterations < opts.max_iterations; ++res.iterations) {
    if (!(g.lpNorm<Eigen::Infinity>() > opts.gradient_tol)) {
      res.converged = true;
      break;
    }
    // Two-loop recursion.
    Eigen::VectorXd q = g;
    std::vector<double> alpha(s_hist.size());
    for (int k = static_cast<int>(s_hist.size()) - 1; k >= 0; --k) {
      alpha[k] = rho_hist[k] * s_hist[k].dot(q);
      q -= alpha[k] * y_hist[k];
    }
    double gamma = 1.0;
    if (!s_hist.empty()) gamma = s_hist.back().dot(y_hist.back()) / y_hist.back().squaredNorm();
    Eigen::VectorXd dir = gamma * q;
    for (size_t k = 0; k < s_hist.size(); ++k) {
      double beta = rho_hist[k] * y_hist[k].dot(dir);
      dir += (alpha[k] - beta) * s_hist[k];
    }
    dir = -dir;
    double slope = g.dot(dir);
    if (!(slope < 0.0)) {
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
      dir = -g;
      slope = -g.squaredNorm();
    }

    double t = s_hist.empty() ? step_hint : 1.0;
    Eigen::VectorXd xn(n), gn(n);
    double fn = 0.0;
    bool accepted = false;
    for (int bt = 0; bt < 60; ++bt) {
      xn = x + t * dir;
      fn = f(xn, &gn);
      if (std::isfinite(fn) && fn <= fx + 1e-4 * t * slope) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      if (s_hist.empty()) {
        res.converged = true;
        break;
      }
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
      continue;
    }
    Eigen::VectorXd s = xn - x;
    Eigen::VectorXd y = gn - g;
    double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      s_hist.push_back(s);
      y_hist.push_back(y);
      rho_hist.push_back(1.0 / sy);
      if (static_cast<int>(s_hist.size()) > opts.history) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    double decrease = fx - fn;
    x = std::move(xn);
    g = gn;
    step_hint = t;
    fx = fn;
    if (decrease <= opts.value_tol * std::max(1.0, std::abs(fx))) {
      if (++flat >= 5) {
        res.converged = true;
        break;
      }
    } else {
      flat = 0;
    }
  }
  res.x = std::move(x);
  res.value = fx;
  return res;
}

MinimizeResult nelder_mead(const Objective &f, const Eigen::VectorXd &x0, const NelderMeadOptions &opts) {
  const Eigen::Index n = x0.size();
  std::vector<Eigen::VectorXd> pts(n + 1, x0);
  std::vector<double> vals(n + 1);
  for (Eigen::Index k = 0; k < n; ++k) {
    pts[k + 1](k) += opts.initial_step;
  }
  int evals = 0;
  auto eval = [&](const Eigen::VectorXd &x) {
    ++evals;
    double v = f(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };
  for (Eigen::Index k = 0; k <= n; ++k) vals[k] = eval(pts[k]);
  std::vector<int> order(n + 1);
  MinimizeResult res;
  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
    const int best = order.front();
    const int worst = order.back();
    const int second = order[n - 1];
    if (vals[worst] - vals[best] <= opts.tol || evals >= opts.max_evaluations) {
      res.converged = vals[worst] - vals[best] <= opts.tol;
      break;
    }
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int k = 0; k < n; ++k) centroid += pts[order[k]];
    centroid /= static_cast<double>(n);
    Eigen::VectorXd xr = centroid + (centroid - pts[worst]);
    double fr = eval(xr);
    if (fr < vals[best]) {
      Eigen::VectorXd xe = centroid + 2.0 * (centroid - pts[worst]);
      double fe = eval(xe);
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
    } else if (fr < vals[second]) {
      pts[worst] = xr;
      vals[worst] = fr;
    } else {
      bool outside = fr < vals[worst];
      Eigen::VectorXd xc = outside ? Eigen::VectorXd(centroid + 0.5 * (xr - centroid))
                                   : Eigen::VectorXd(centroid + 0.5 * (pts[worst] - centroid));
      double fc = eval(xc);
      if (fc < (outside ? fr : vals[worst])) {
        pts[worst] = xc;
        vals[worst] = fc;
      } else {
        for (int k = 1; k <= n; ++k) {
          int idx = order[k];
          pts[idx] = pts[best] + 0.5 * (pts[idx] - pts[best]);
          vals[idx] = eval(pts[idx]);
        }
      }
    }
    ++res.iterations;
  }
  int best = static_cast<int>(std::min_element(vals.begin(), vals.end()) - vals.begin());
  res.x = pts[best];
  res.value = vals[best];
  return res;
}

}  // namespace qintrinsic
