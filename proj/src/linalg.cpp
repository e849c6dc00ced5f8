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

#include "qintrinsic/linalg.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qintrinsic/errors.h"

namespace qintrinsic {

namespace {

void check_hermitian(const ComplexMatrix &h, double tol) {
  if (h.rows() != h.cols()) {
    throw DimensionMismatch("expected a square matrix, got " + std::to_string(h.rows()) + "x" +
                            std::to_string(h.cols()));
  }
  double r = hermitian_residual(h);
  if (r > tol * std::max(1.0, max_abs(h))) {
    throw NonHermitian(r);
  }
}

}  // namespace

Ket::Ket(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) {
    throw InvalidState("ket has no amplitudes");
  }
  double n = amplitudes_.norm();
  if (std::abs(n - 1.0) > kTolerance) {
    throw InvalidState("ket norm " + std::to_string(n) + " differs from 1");
  }
}

Ket Ket::normalized(const ComplexVector &v) {
  double n = v.norm();
  if (!(n > 0.0)) {
    throw InvalidState("cannot normalize the zero vector");
  }
  return Ket(v / n);
}

Ket Ket::basis(int dim, int index) {
  ComplexVector v = ComplexVector::Zero(dim);
  v(index) = 1.0;
  return Ket(std::move(v));
}

DensityState::DensityState(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  check_hermitian(matrix_, kTolerance);
  double tr = matrix_.trace().real();
  if (std::abs(tr - 1.0) > kTolerance) {
    throw InvalidState("trace " + std::to_string(tr) + " differs from 1");
  }
  auto ev = hermitian_eigenvalues(matrix_);
  if (ev.back() < -kTolerance) {
    throw InvalidState("negative eigenvalue " + std::to_string(ev.back()));
  }
  // Exact Hermitian storage keeps downstream eigensolvers honest.
  matrix_ = (0.5 * (matrix_ + matrix_.adjoint())).eval();
}

DensityState DensityState::from_ket(const Ket &ket) { return DensityState(ket.projector()); }

DensityState DensityState::maximally_mixed(int dim) {
  return DensityState(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityState::purity() const { return (matrix_ * matrix_).trace().real(); }

double max_abs(const ComplexMatrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double hermitian_residual(const ComplexMatrix &h) { return max_abs(h - h.adjoint()); }

Eigensystem hermitian_eig(const ComplexMatrix &h, double tol) {
  check_hermitian(h, tol);
  ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  const auto &vals = solver.eigenvalues();
  const int n = static_cast<int>(vals.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return vals(a) > vals(b); });
  Eigensystem out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = vals(order[k]);
    out.vectors.col(k) = solver.eigenvectors().col(order[k]);
  }
  return out;
}

Eigensystem hermitian_eig_resolved(const ComplexMatrix &h, const ComplexMatrix &tie_breaker, double cluster_tol) {
  Eigensystem es = hermitian_eig(h);
  const int n = static_cast<int>(es.values.size());
  if (tie_breaker.rows() != n || tie_breaker.cols() != n) {
    throw DimensionMismatch("hermitian_eig_resolved: tie breaker has the wrong shape");
  }
  int start = 0;
  while (start < n) {
    int stop = start + 1;
    while (stop < n && es.values[start] - es.values[stop] <= cluster_tol) {
      ++stop;
    }
    if (stop - start > 1) {
      ComplexMatrix basis = es.vectors.middleCols(start, stop - start);
      ComplexMatrix compressed = basis.adjoint() * tie_breaker * basis;
      Eigensystem inner = hermitian_eig(0.5 * (compressed + compressed.adjoint()), 1.0);
      es.vectors.middleCols(start, stop - start) = basis * inner.vectors;
    }
    start = stop;
  }
  return es;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &h, double tol) {
  check_hermitian(h, tol);
  ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  std::vector<double> v(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

double entropy_terms(std::span<const double> values) {
  double h = 0.0;
  for (double x : values) {
    if (x > 0.0) {
      h -= x * std::log2(x);
    }
  }
  return h;
}

double shannon_entropy(std::span<const double> p) {
  double total = 0.0;
  for (double x : p) {
    if (x < -1e-12) {
      throw InvalidDistribution("negative probability " + std::to_string(x));
    }
    total += std::max(x, 0.0);
  }
  if (std::abs(total - 1.0) > kTolerance) {
    throw InvalidDistribution("probabilities sum to " + std::to_string(total));
  }
  return entropy_terms(p);
}

double psd_entropy(const ComplexMatrix &x) {
  auto ev = hermitian_eigenvalues(x);
  return entropy_terms(ev);
}

double von_neumann_entropy(const DensityState &rho) { return psd_entropy(rho.matrix()); }

double relative_entropy(const DensityState &rho, const DensityState &sigma) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("relative_entropy: dimensions differ");
  }
  auto es = hermitian_eig(sigma.matrix());
  constexpr double kSupport = 1e-12;
  const int n = sigma.dim();
  ComplexMatrix log_sigma = ComplexMatrix::Zero(n, n);
  double leak = 0.0;
  for (int k = 0; k < n; ++k) {
    ComplexVector v = es.vectors.col(k);
    if (es.values[k] > kSupport) {
      log_sigma += std::log2(es.values[k]) * (v * v.adjoint());
    } else {
      leak += std::real(v.dot(rho.matrix() * v));
    }
  }
  if (leak > kTolerance) {
    return std::numeric_limits<double>::infinity();
  }
  double cross = (rho.matrix() * log_sigma).trace().real();
  return std::max(0.0, -von_neumann_entropy(rho) - cross);
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix &m) {
  auto es = hermitian_eig(m);
  const int n = static_cast<int>(m.rows());
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    double lam = es.values[k];
    if (lam < -kTolerance) {
      throw NotPsd(-1, lam);
    }
    if (lam > 0.0) {
      ComplexVector v = es.vectors.col(k);
      out += std::sqrt(lam) * (v * v.adjoint());
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &x, int dim_a, int dim_b, Subsystem keep) {
  if (dim_a < 1 || dim_b < 1 || x.rows() != x.cols() || x.rows() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw DimensionMismatch("partial_trace: operator is " + std::to_string(x.rows()) + "x" +
                            std::to_string(x.cols()) + ", factors " + std::to_string(dim_a) + "*" +
                            std::to_string(dim_b));
  }
  if (keep == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
    for (int a = 0; a < dim_a; ++a) {
      for (int a2 = 0; a2 < dim_a; ++a2) {
        Complex s = 0.0;
        for (int b = 0; b < dim_b; ++b) {
          s += x(a * dim_b + b, a2 * dim_b + b);
        }
        out(a, a2) = s;
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
  for (int b = 0; b < dim_b; ++b) {
    for (int b2 = 0; b2 < dim_b; ++b2) {
      Complex s = 0.0;
      for (int a = 0; a < dim_a; ++a) {
        s += x(a * dim_b + b, a * dim_b + b2);
      }
      out(b, b2) = s;
    }
  }
  return out;
}

ComplexMatrix complete_isometry_to_unitary(const ComplexMatrix &v) {
  const Eigen::Index n = v.rows();
  const Eigen::Index d = v.cols();
  if (d > n) {
    throw DimensionMismatch("isometry has more columns than rows");
  }
  double residual = max_abs(v.adjoint() * v - ComplexMatrix::Identity(d, d));
  if (residual > kTolerance) {
    throw NotIsometry(residual);
  }
  ComplexMatrix u(n, n);
  u.leftCols(d) = v;
  Eigen::Index filled = d;
  for (Eigen::Index k = 0; k < n && filled < n; ++k) {
    ComplexVector c = ComplexVector::Zero(n);
    c(k) = 1.0;
    // Two passes of classical Gram-Schmidt.
    for (int pass = 0; pass < 2; ++pass) {
      c -= u.leftCols(filled) * (u.leftCols(filled).adjoint() * c);
    }
    double norm = c.norm();
    if (norm < 1e-6) {
      continue;
    }
    u.col(filled++) = c / norm;
  }
  return u;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

RealVector hermitian_to_real(const ComplexMatrix &h, bool isometric) {
  const Eigen::Index n = h.rows();
  const double s = isometric ? std::sqrt(2.0) : 1.0;
  RealVector out(n * n);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    out(k++) = h(i, i).real();
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      out(k++) = s * h(i, j).real();
      out(k++) = s * h(i, j).imag();
    }
  }
  return out;
}

ComplexMatrix real_to_hermitian(const RealVector &x, int dim, bool isometric) {
  if (x.size() != static_cast<Eigen::Index>(dim) * dim) {
    throw DimensionMismatch("real_to_hermitian: expected " + std::to_string(dim * dim) + " coordinates");
  }
  const double s = isometric ? 1.0 / std::sqrt(2.0) : 1.0;
  ComplexMatrix h(dim, dim);
  Eigen::Index k = 0;
  for (int i = 0; i < dim; ++i) {
    h(i, i) = x(k++);
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      double re = s * x(k++);
      double im = s * x(k++);
      h(i, j) = Complex(re, im);
      h(j, i) = Complex(re, -im);
    }
  }
  return h;
}

}  // namespace qintrinsic
