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

#include "roof.h"

#include <limits>

#include "qintrinsic/rng.h"

namespace qintrinsic::detail {

namespace {

// Polar retraction onto matrices with orthonormal columns.
ComplexMatrix orthonormalize(const ComplexMatrix &x) {
  ComplexMatrix gram = x.adjoint() * x;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (gram + gram.adjoint()));
  Eigen::VectorXd inv = solver.eigenvalues().cwiseMax(1e-300).cwiseSqrt().cwiseInverse();
  return x * (solver.eigenvectors() * inv.asDiagonal() * solver.eigenvectors().adjoint());
}

ComplexMatrix tangent(const ComplexMatrix &w, const ComplexMatrix &g) {
  ComplexMatrix wg = w.adjoint() * g;
  return g - w * (0.5 * (wg + wg.adjoint()));
}

double inner(const ComplexMatrix &a, const ComplexMatrix &b) { return (a.adjoint() * b).trace().real(); }

class RoofProblem {
 public:
  explicit RoofProblem(std::vector<ComplexMatrix> q) : q_(std::move(q)) {}

  double value(const ComplexMatrix &w, ComplexMatrix *grad) const {
    const Eigen::Index n = w.rows();
    const Eigen::Index r = w.cols();
    const size_t m = q_.size();
    std::vector<double> tau(m);
    std::vector<ComplexVector> qc(m);
    double f = 0.0;
    if (grad) grad->setZero(n, r);
    for (Eigen::Index k = 0; k < n; ++k) {
      ComplexVector c = w.row(k).transpose();
      double sigma = 0.0;
      for (size_t i = 0; i < m; ++i) {
        qc[i] = q_[i] * c;
        tau[i] = std::max(0.0, std::real(c.dot(qc[i])));
        sigma += tau[i];
        f += phi(tau[i]);
      }
      f -= phi(sigma);
      if (grad) {
        ComplexVector g = ComplexVector::Zero(r);
        const double ds = dphi(sigma);
        for (size_t i = 0; i < m; ++i) g += (dphi(tau[i]) - ds) * qc[i];
        grad->row(k) = 2.0 * g.transpose();
      }
    }
    return f;
  }

  // Riemannian conjugate gradient on the Stiefel manifold.
  double minimize(ComplexMatrix &w, const OptimizerConfig &cfg) const {
    ComplexMatrix g;
    double f = value(w, &g);
    ComplexMatrix xi = tangent(w, g);
    ComplexMatrix dir = -xi;
    double step = 1.0 / std::max(1.0, std::sqrt(inner(xi, xi)));
    int flat = 0;
    for (int it = 0; it < cfg.max_iterations; ++it) {
      double xx = inner(xi, xi);
      if (xx < 1e-22) break;
      double slope = inner(xi, dir);
      if (!(slope < 0.0)) {
        dir = -xi;
        slope = -xx;
      }
      double t = 2.0 * step;
      ComplexMatrix wn;
      double fn = std::numeric_limits<double>::infinity();
      bool ok = false;
      for (int bt = 0; bt < 50; ++bt) {
        wn = orthonormalize(w + t * dir);
        fn = value(wn, nullptr);
        if (fn <= f + 1e-4 * t * slope) {
          ok = true;
          break;
        }
        t *= 0.5;
      }
      if (!ok) break;
      ComplexMatrix gn;
      value(wn, &gn);
      ComplexMatrix xin = tangent(wn, gn);
      ComplexMatrix moved = tangent(wn, xi);
      double beta = std::max(0.0, inner(xin, xin - moved) / xx);
      dir = -xin + beta * tangent(wn, dir);
      double decrease = f - fn;
      w = std::move(wn);
      xi = std::move(xin);
      f = fn;
      step = t;
      if (decrease < 1e-2 * cfg.convergence_tol * std::max(1.0, f)) {
        if (++flat >= 10) break;
      } else {
        flat = 0;
      }
    }
    return f;
  }

 private:
  std::vector<ComplexMatrix> q_;
};

}  // namespace

PureDecomposition RoofResult::ensemble() const {
  PureDecomposition out;
  for (Eigen::Index k = 0; k < vectors.cols(); ++k) {
    double q = vectors.col(k).squaredNorm();
    if (q <= 1e-14) continue;
    out.weights.push_back(q);
    out.kets.push_back(Ket::normalized(vectors.col(k)));
  }
  double total = 0.0;
  for (double q : out.weights) total += q;
  for (double &q : out.weights) q /= total;
  return out;
}

RoofResult born_convex_roof(const ComplexMatrix &rho, const std::vector<ComplexMatrix> &elements,
                            const OptimizerConfig &cfg, const ComplexMatrix *warm) {
  const Eigen::Index dim = rho.rows();
  ComplexMatrix tie = ComplexMatrix::Zero(dim, dim);
  for (size_t i = 0; i < elements.size(); ++i) tie += static_cast<double>(i + 1) * elements[i];
  Eigensystem es = hermitian_eig_resolved(rho, tie);
  int r = 0;
  while (r < dim && es.values[r] > 1e-12) ++r;
  ComplexMatrix u(dim, r);
  for (int l = 0; l < r; ++l) u.col(l) = std::sqrt(es.values[l]) * es.vectors.col(l);

  std::vector<ComplexMatrix> q;
  q.reserve(elements.size());
  for (const auto &e : elements) {
    ComplexMatrix c = u.adjoint() * e * u;
    q.push_back(0.5 * (c + c.adjoint()));
  }
  RoofProblem problem(q);

  RoofResult best;
  if (r == 1) {
    best.exact = true;
    best.vectors = u;
    best.value = problem.value(ComplexMatrix::Identity(1, 1), nullptr);
    return best;
  }

  const int n = cfg.decomposition_terms > 0 ? std::max(cfg.decomposition_terms, r) : r * r;
  std::vector<ComplexMatrix> starts;
  if (warm && warm->rows() == dim && warm->cols() > 0) {
    // Coefficients of the warm vectors in the basis u.
    ComplexMatrix coeff = u.completeOrthogonalDecomposition().solve(*warm);
    ComplexMatrix w = ComplexMatrix::Zero(n, r);
    const Eigen::Index cols = std::min<Eigen::Index>(n, coeff.cols());
    w.topRows(cols) = coeff.leftCols(cols).transpose();
    starts.push_back(orthonormalize(w));
  }
  ComplexMatrix eigen_start = ComplexMatrix::Zero(n, r);
  eigen_start.topRows(r).setIdentity();
  starts.push_back(eigen_start);

  Rng rng(cfg.seed);
  best.value = std::numeric_limits<double>::infinity();
  const int runs = static_cast<int>(starts.size()) + std::max(0, cfg.restarts);
  for (int run = 0; run < runs; ++run) {
    ComplexMatrix w;
    if (run < static_cast<int>(starts.size())) {
      w = starts[run];
    } else {
      Rng sub = rng.substream(static_cast<std::uint64_t>(run));
      ComplexMatrix z(n, r);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < r; ++b) z(a, b) = sub.complex_normal();
      }
      w = orthonormalize(z);
    }
    double v = problem.minimize(w, cfg);
    if (v < best.value) {
      best.value = v;
      // psi_k = sum_l W_kl u_l.
      best.vectors = u * w.transpose();
    }
  }
  best.value = std::max(0.0, best.value);
  return best;
}

}  // namespace qintrinsic::detail
