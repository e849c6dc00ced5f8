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

#include "qintrinsic/naimark.h"

#include "qintrinsic/errors.h"

namespace qintrinsic {

Pvm::Pvm(std::vector<ComplexMatrix> projectors) : projectors_(std::move(projectors)) {
  if (projectors_.empty()) {
    throw DimensionMismatch("a PVM needs at least one projector");
  }
  const Eigen::Index n = projectors_.front().rows();
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (size_t i = 0; i < projectors_.size(); ++i) {
    const auto &p = projectors_[i];
    if (p.rows() != n || p.cols() != n) {
      throw DimensionMismatch("projector " + std::to_string(i) + " has the wrong shape");
    }
    double h = hermitian_residual(p);
    if (h > 1e-8) throw NotHermitian(i, h);
    double idem = max_abs(p * p - p);
    if (idem > 1e-8) {
      throw InvalidState("projector " + std::to_string(i) + " is not idempotent (residual " + std::to_string(idem) + ")");
    }
    for (size_t j = 0; j < i; ++j) {
      double orth = max_abs(p * projectors_[j]);
      if (orth > 1e-8) {
        throw InvalidState("projectors " + std::to_string(j) + " and " + std::to_string(i) + " overlap");
      }
    }
    sum += p;
  }
  double r = max_abs(sum - ComplexMatrix::Identity(n, n));
  if (r > kTolerance) throw IncompleteSum(r);
}

NaimarkExtension extension_from_unitary(int system_dim, int ancilla_dim, const ComplexMatrix &unitary) {
  const int n = system_dim * ancilla_dim;
  if (unitary.rows() != n || unitary.cols() != n) {
    throw DimensionMismatch("dilating unitary must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  double r = max_abs(unitary.adjoint() * unitary - ComplexMatrix::Identity(n, n));
  if (r > 1e-8) throw NotIsometry(r);
  std::vector<ComplexMatrix> proj;
  proj.reserve(ancilla_dim);
  for (int i = 0; i < ancilla_dim; ++i) {
    // Rows of U with ancilla index i.
    ComplexMatrix rows(system_dim, n);
    for (int a = 0; a < system_dim; ++a) rows.row(a) = unitary.row(a * ancilla_dim + i);
    ComplexMatrix p = rows.adjoint() * rows;
    proj.push_back(0.5 * (p + p.adjoint()));
  }
  return NaimarkExtension{system_dim, ancilla_dim, unitary, Pvm(std::move(proj)), 0};
}

NaimarkExtension canonical_extension(const Povm &p) {
  const int d = p.dim();
  const int m = p.size();
  const int n = d * m;
  ComplexMatrix v(n, d);
  for (int i = 0; i < m; ++i) {
    ComplexMatrix a = matrix_sqrt_psd(p[i]);
    for (int row = 0; row < d; ++row) v.row(row * m + i) = a.row(row);
  }
  // Restore exact orthonormality lost to eigen-solver rounding.
  ComplexMatrix gram = v.adjoint() * v;
  v = v * matrix_sqrt_psd(gram).inverse();
  ComplexMatrix w = complete_isometry_to_unitary(v);
  // Column b * m of U carries input |b>|0>; the completion fills the rest in order.
  ComplexMatrix u(n, n);
  int next = d;
  for (int col = 0; col < n; ++col) {
    if (col % m == 0) {
      u.col(col) = w.col(col / m);
    } else {
      u.col(col) = w.col(next++);
    }
  }
  return extension_from_unitary(d, m, u);
}

double consistency_check(const NaimarkExtension &ext, const Povm &p) {
  if (ext.system_dim != p.dim() || ext.ancilla_dim != p.size()) {
    throw DimensionMismatch("extension is " + std::to_string(ext.system_dim) + "x" + std::to_string(ext.ancilla_dim) +
                            ", POVM is " + std::to_string(p.dim()) + "x" + std::to_string(p.size()));
  }
  ComplexMatrix sigma = ComplexMatrix::Zero(ext.ancilla_dim, ext.ancilla_dim);
  sigma(ext.ancilla_index, ext.ancilla_index) = 1.0;
  ComplexMatrix lift = kron(ComplexMatrix::Identity(ext.system_dim, ext.system_dim), sigma);
  double worst = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    ComplexMatrix reduced = partial_trace(ext.pvm[i] * lift, ext.system_dim, ext.ancilla_dim, Subsystem::A);
    worst = std::max(worst, max_abs(reduced - p[i]));
  }
  return worst;
}

DensityState embed_state(const DensityState &rho, const NaimarkExtension &ext) {
  if (rho.dim() != ext.system_dim) {
    throw DimensionMismatch("state dimension " + std::to_string(rho.dim()) + " differs from system dimension " +
                            std::to_string(ext.system_dim));
  }
  ComplexMatrix sigma = ComplexMatrix::Zero(ext.ancilla_dim, ext.ancilla_dim);
  sigma(ext.ancilla_index, ext.ancilla_index) = 1.0;
  return DensityState(kron(rho.matrix(), sigma));
}

}  // namespace qintrinsic
