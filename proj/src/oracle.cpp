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

#include "qintrinsic/oracle.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "qintrinsic/errors.h"

namespace qintrinsic {

PureStateGrid::PureStateGrid(int d, int resolution) : d_(d), resolution_(resolution) {
  if (d != 2 && d != 3) throw UnsupportedDimension(d);
  if (resolution < 1) throw InvalidDistribution("grid resolution must be positive");
  const std::size_t polar = static_cast<std::size_t>(resolution) + 1;
  const std::size_t phase = 2 * static_cast<std::size_t>(resolution);
  size_ = d == 2 ? polar * phase : polar * polar * phase * phase;
}

Ket PureStateGrid::at(std::size_t index) const {
  const double pi = std::numbers::pi;
  const std::size_t phase = 2 * static_cast<std::size_t>(resolution_);
  const std::size_t polar = static_cast<std::size_t>(resolution_) + 1;
  ComplexVector v(d_);
  if (d_ == 2) {
    const double t = pi * static_cast<double>(index / phase) / resolution_;
    const double f = pi * static_cast<double>(index % phase) / resolution_;
    v << std::cos(t / 2), std::polar(std::sin(t / 2), f);
  } else {
    std::size_t rest = index;
    const double g = pi * static_cast<double>(rest % phase) / resolution_;
    rest /= phase;
    const double f = pi * static_cast<double>(rest % phase) / resolution_;
    rest /= phase;
    const double b = 0.5 * pi * static_cast<double>(rest % polar) / resolution_;
    rest /= polar;
    const double a = 0.5 * pi * static_cast<double>(rest) / resolution_;
    v << std::cos(a), std::polar(std::sin(a) * std::cos(b), f), std::polar(std::sin(a) * std::sin(b), g);
  }
  return Ket::normalized(v);
}

std::vector<Ket> grid_pure_states(int d, int resolution) {
  PureStateGrid grid(d, resolution);
  std::vector<Ket> out;
  out.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) out.push_back(grid.at(k));
  return out;
}

PureMinimum brute_force_min_pure(const Povm &p, int resolution) {
  PureStateGrid grid(p.dim(), resolution);
  double best = std::numeric_limits<double>::infinity();
  std::size_t arg = 0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    Ket psi = grid.at(k);
    double h = entropy_terms(p.probabilities(psi.amplitudes()));
    if (h < best) {
      best = h;
      arg = k;
    }
  }
  return PureMinimum{best, grid.at(arg)};
}

Povm random_povm(int d, int m, Rng &rng, int rank) {
  if (m < 1) throw DimensionMismatch("random_povm needs m >= 1");
  if (rank <= 0 || rank > d) rank = d;
  if (rank * m < d) throw DimensionMismatch("random_povm: m * rank must be at least d");
  std::vector<ComplexMatrix> g(m);
  ComplexMatrix s = ComplexMatrix::Zero(d, d);
  for (int i = 0; i < m; ++i) {
    ComplexMatrix x(d, rank);
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < rank; ++c) x(r, c) = rng.complex_normal();
    }
    g[i] = x * x.adjoint();
    s += g[i];
  }
  Eigensystem es = hermitian_eig(s);
  ComplexMatrix inv_sqrt = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    ComplexVector v = es.vectors.col(k);
    inv_sqrt += (1.0 / std::sqrt(es.values[k])) * (v * v.adjoint());
  }
  for (auto &e : g) {
    e = inv_sqrt * e * inv_sqrt;
    e = (0.5 * (e + e.adjoint())).eval();
  }
  return Povm(std::move(g));
}

DensityState random_density(int d, int rank, Rng &rng) {
  if (rank < 1 || rank > d) throw DimensionMismatch("random_density needs 1 <= rank <= d");
  ComplexMatrix y(d, rank);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < rank; ++c) y(r, c) = rng.complex_normal();
  }
  ComplexMatrix rho = y * y.adjoint();
  rho /= rho.trace().real();
  return DensityState(0.5 * (rho + rho.adjoint()));
}

Ket random_ket(int d, Rng &rng) {
  ComplexVector v(d);
  for (int k = 0; k < d; ++k) v(k) = rng.complex_normal();
  return Ket::normalized(v);
}

ComplexMatrix random_unitary(int d, Rng &rng) {
  ComplexMatrix z(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) z(r, c) = rng.complex_normal();
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix rr = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < d; ++k) {
    Complex diag = rr(k, k);
    q.col(k) *= diag / std::abs(diag);
  }
  return q;
}

double verify_decomposition(const Decomposition &dec, const Povm &target) {
  const double inf = std::numeric_limits<double>::infinity();
  if (dec.weights.size() != dec.components.size() || dec.weights.empty()) return inf;
  const int d = target.dim();
  const int m = target.size();
  double violation = 0.0;
  double total = 0.0;
  std::vector<ComplexMatrix> sum(m, ComplexMatrix::Zero(d, d));
  for (size_t j = 0; j < dec.weights.size(); ++j) {
    const double r = dec.weights[j];
    const Povm &n = dec.components[j];
    if (n.dim() != d || n.size() > m) return inf;
    violation = std::max(violation, -r);
    total += r;
    PovmDiagnostics diag = diagnose(n.elements());
    violation = std::max({violation, diag.hermitian_residual, -diag.min_eigenvalue, diag.completeness_residual});
    for (int i = 0; i < n.size(); ++i) sum[i] += r * n[i];
  }
  violation = std::max(violation, std::abs(total - 1.0));
  double residual = 0.0;
  for (int i = 0; i < m; ++i) residual = std::max(residual, max_abs(sum[i] - target[i]));
  return residual + violation;
}

}  // namespace qintrinsic
