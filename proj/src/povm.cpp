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

#include "qintrinsic/povm.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "qintrinsic/errors.h"

namespace qintrinsic {

namespace {

constexpr int kMaxSplitDepth = 64;
constexpr double kRankCutoff = 1e-8;
// Split coefficients below this are treated as zero.
constexpr double kCoefficientDust = 1e-10;

void check_probability_vector(std::span<const double> w) {
  if (w.empty()) {
    throw InvalidDistribution("empty weight list");
  }
  double total = 0.0;
  for (double x : w) {
    if (x < -1e-12) {
      throw InvalidDistribution("negative weight " + std::to_string(x));
    }
    total += x;
  }
  if (std::abs(total - 1.0) > kTolerance) {
    throw InvalidDistribution("weights sum to " + std::to_string(total));
  }
}

// Real vectorizations of the given elements as matrix columns.
Eigen::MatrixXd vectorize(const std::vector<ComplexMatrix> &elements, std::span<const int> indices) {
  const int d = static_cast<int>(elements.front().rows());
  Eigen::MatrixXd a(d * d, static_cast<Eigen::Index>(indices.size()));
  for (size_t k = 0; k < indices.size(); ++k) {
    a.col(static_cast<Eigen::Index>(k)) = hermitian_to_real(elements[indices[k]]);
  }
  return a;
}

// Dependence among the lowest-index columns: the shortest prefix that is
// linearly dependent has a one-dimensional null space, whose spanning
// vector (last entry positive, unit norm) is returned.
std::optional<Eigen::VectorXd> lowest_dependence(const Eigen::MatrixXd &a, int *rank_out) {
  const Eigen::Index n = a.cols();
  if (n == 0) {
    if (rank_out) *rank_out = 0;
    return std::nullopt;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> full(a);
  const auto &sv = full.singularValues();
  const double cutoff = kRankCutoff * sv(0);
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) > cutoff) ++rank;
  }
  if (rank_out) *rank_out = rank;
  if (rank == n) {
    return std::nullopt;
  }
  for (Eigen::Index p = 2; p <= n; ++p) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a.leftCols(p), Eigen::ComputeFullV);
    const auto &s = svd.singularValues();
    int r = 0;
    for (Eigen::Index k = 0; k < s.size(); ++k) {
      if (s(k) > cutoff) ++r;
    }
    if (r < p) {
      Eigen::VectorXd v = svd.matrixV().col(p - 1);
      if (v(p - 1) < 0.0) v = -v;
      Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
      out.head(p) = v / v.norm();
      return out;
    }
  }
  // A single zero column cannot occur: zero elements are filtered out.
  return std::nullopt;
}

std::vector<int> nonzero_indices(const std::vector<ComplexMatrix> &elements) {
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
    if (!is_zero_element(elements[i])) idx.push_back(i);
  }
  return idx;
}

}  // namespace

Povm::Povm(std::vector<ComplexMatrix> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) {
    throw DimensionMismatch("a POVM needs at least one element");
  }
  validate(elements_);
  for (auto &e : elements_) {
    e = (0.5 * (e + e.adjoint())).eval();
  }
}

std::vector<double> Povm::probabilities(const ComplexVector &psi) const {
  std::vector<double> p(elements_.size());
  for (size_t i = 0; i < elements_.size(); ++i) {
    p[i] = std::max(0.0, std::real(psi.dot(elements_[i] * psi)));
  }
  return p;
}

PovmDiagnostics diagnose(std::span<const ComplexMatrix> elements) {
  PovmDiagnostics out;
  if (elements.empty()) return out;
  const Eigen::Index d = elements.front().rows();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  out.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < elements.size(); ++i) {
    const auto &e = elements[i];
    if (e.rows() != d || e.cols() != d) {
      throw DimensionMismatch("element " + std::to_string(i) + " has shape " + std::to_string(e.rows()) + "x" +
                              std::to_string(e.cols()) + ", expected " + std::to_string(d) + "x" + std::to_string(d));
    }
    double h = hermitian_residual(e);
    if (h > out.hermitian_residual || out.hermitian_worst < 0) {
      out.hermitian_residual = h;
      out.hermitian_worst = static_cast<int>(i);
    }
    ComplexMatrix sym = 0.5 * (e + e.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
    double lo = solver.eigenvalues().minCoeff();
    if (lo < out.min_eigenvalue) {
      out.min_eigenvalue = lo;
      out.min_eigenvalue_index = static_cast<int>(i);
    }
    sum += sym;
  }
  out.completeness_residual = max_abs(sum - ComplexMatrix::Identity(d, d));
  return out;
}

void validate(std::span<const ComplexMatrix> elements, double tol) {
  if (elements.empty()) {
    throw DimensionMismatch("a POVM needs at least one element");
  }
  const Eigen::Index d = elements.front().rows();
  for (size_t i = 0; i < elements.size(); ++i) {
    const auto &e = elements[i];
    if (e.rows() != d || e.cols() != d) {
      throw DimensionMismatch("element " + std::to_string(i) + " has the wrong shape");
    }
    double h = hermitian_residual(e);
    if (h > tol) throw NotHermitian(i, h);
  }
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (size_t i = 0; i < elements.size(); ++i) {
    ComplexMatrix sym = 0.5 * (elements[i] + elements[i].adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
    double lo = solver.eigenvalues().minCoeff();
    if (lo < -tol) throw NotPsd(static_cast<std::ptrdiff_t>(i), lo);
    sum += sym;
  }
  double r = max_abs(sum - ComplexMatrix::Identity(d, d));
  if (r > tol) throw IncompleteSum(r);
}

bool is_zero_element(const ComplexMatrix &m) { return m.trace().real() < kZeroElementTrace; }

bool is_rank_one(const Povm &p) {
  for (const auto &e : p.elements()) {
    if (is_zero_element(e)) continue;
    auto ev = hermitian_eigenvalues(e);
    int above = 0;
    for (double x : ev) {
      if (x > 1e-9) ++above;
    }
    if (above != 1) return false;
  }
  return true;
}

std::string to_string(Extremality e) {
  switch (e) {
    case Extremality::Extremal:
      return "Extremal";
    case Extremality::NotExtremal:
      return "NotExtremal";
    case Extremality::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

ExtremalityVerdict extremality_check(const Povm &p) {
  ExtremalityVerdict v;
  auto idx = nonzero_indices(p.elements());
  Eigen::MatrixXd a = vectorize(p.elements(), idx);
  auto dep = lowest_dependence(a, &v.rank);
  if (dep) {
    std::vector<double> w(p.size(), 0.0);
    for (size_t k = 0; k < idx.size(); ++k) {
      w[idx[k]] = (*dep)(static_cast<Eigen::Index>(k));
    }
    v.status = Extremality::NotExtremal;
    v.witness = std::move(w);
    return v;
  }
  v.status = is_rank_one(p) ? Extremality::Extremal : Extremality::Inconclusive;
  return v;
}

Povm mix(std::span<const double> weights, std::span<const Povm> povms) {
  if (weights.size() != povms.size() || povms.empty()) {
    throw DimensionMismatch("mix: weight and POVM counts differ");
  }
  check_probability_vector(weights);
  const int d = povms.front().dim();
  int m = 0;
  for (const auto &p : povms) {
    if (p.dim() != d) throw DimensionMismatch("mix: POVM dimensions differ");
    m = std::max(m, p.size());
  }
  std::vector<ComplexMatrix> out(m, ComplexMatrix::Zero(d, d));
  for (size_t j = 0; j < povms.size(); ++j) {
    for (int i = 0; i < povms[j].size(); ++i) {
      out[i] += weights[j] * povms[j][i];
    }
  }
  return Povm(std::move(out));
}

Povm coarse_grain(const Povm &p, std::span<const int> mapping, int groups) {
  if (static_cast<int>(mapping.size()) != p.size()) {
    throw DimensionMismatch("coarse_grain: mapping length differs from element count");
  }
  int top = *std::max_element(mapping.begin(), mapping.end());
  if (groups < 0) groups = top + 1;
  if (top >= groups || *std::min_element(mapping.begin(), mapping.end()) < 0) {
    throw DimensionMismatch("coarse_grain: mapping out of range");
  }
  const int d = p.dim();
  std::vector<ComplexMatrix> out(groups, ComplexMatrix::Zero(d, d));
  for (int i = 0; i < p.size(); ++i) {
    out[mapping[i]] += p[i];
  }
  return Povm(std::move(out));
}

Refinement refine_rank_one(const Povm &p, const std::optional<ComplexMatrix> &tie_breaker) {
  const int d = p.dim();
  std::vector<ComplexMatrix> refined;
  std::vector<int> mapping;
  for (int i = 0; i < p.size(); ++i) {
    if (is_zero_element(p[i])) continue;
    Eigensystem es = tie_breaker ? hermitian_eig_resolved(p[i], *tie_breaker) : hermitian_eig(p[i]);
    for (int k = 0; k < d; ++k) {
      if (es.values[k] <= 1e-9) continue;
      ComplexVector v = es.vectors.col(k);
      refined.push_back(es.values[k] * (v * v.adjoint()));
      mapping.push_back(i);
    }
  }
  // Absorb eigenvalue dust so the refined list stays complete.
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto &r : refined) sum += r;
  ComplexMatrix fix = matrix_sqrt_psd(sum).inverse();
  for (auto &r : refined) r = fix * r * fix;
  return Refinement{Povm(std::move(refined)), std::move(mapping)};
}

Povm Decomposition::mixture() const { return mix(weights, components); }

Decomposition extremal_decompose(const Povm &p, const std::optional<ComplexMatrix> &tie_breaker) {
  Refinement ref = refine_rank_one(p, tie_breaker);
  const auto &r = ref.refined.elements();
  const int n = static_cast<int>(r.size());
  const int m = p.size();

  // Coefficient vectors c describe the POVM {c_k R_k}; the root is c = 1.
  auto support = [&](const Eigen::VectorXd &c) {
    std::vector<int> s;
    for (int k = 0; k < n; ++k) {
      if (c(k) > 0.0) s.push_back(k);
    }
    return s;
  };
  auto witness = [&](const Eigen::VectorXd &c, const std::vector<int> &s) -> std::optional<Eigen::VectorXd> {
    std::vector<ComplexMatrix> cols;
    cols.reserve(s.size());
    for (int k : s) cols.push_back(c(k) * r[k]);
    std::vector<int> all(s.size());
    std::iota(all.begin(), all.end(), 0);
    return lowest_dependence(vectorize(cols, all), nullptr);
  };

  // Follows the M' branch of the splitting until the support is
  // independent: each step zeroes the element with the largest coefficient.
  auto descend = [&](Eigen::VectorXd c) {
    for (int depth = 0;; ++depth) {
      if (depth > kMaxSplitDepth) throw MaxDepthExceeded(kMaxSplitDepth);
      auto s = support(c);
      auto a = witness(c, s);
      if (!a) return c;
      if (a->maxCoeff() < -a->minCoeff()) *a = -*a;
      int top = 0;
      for (int k = 1; k < static_cast<int>(s.size()); ++k) {
        if ((*a)(k) > (*a)(top)) top = k;
      }
      const double a1 = (*a)(top);
      for (int k = 0; k < static_cast<int>(s.size()); ++k) {
        c(s[k]) *= 1.0 - (*a)(k) / a1;
      }
      c(s[top]) = 0.0;
      const double scale = c.maxCoeff();
      for (int k = 0; k < n; ++k) {
        if (c(k) < kCoefficientDust * scale) c(k) = 0.0;
      }
    }
  };

  auto leaf_povm = [&](const Eigen::VectorXd &c) {
    std::vector<ComplexMatrix> els(n);
    for (int k = 0; k < n; ++k) els[k] = c(k) * r[k];
    return Povm(std::move(els));
  };

  Decomposition out;
  Eigen::VectorXd c = Eigen::VectorXd::Ones(n);
  double remaining = 1.0;
  for (int peel = 0;; ++peel) {
    if (peel > n + kMaxSplitDepth) throw MaxDepthExceeded(kMaxSplitDepth);
    Eigen::VectorXd e = descend(c);
    double t = 1.0;
    int arg = -1;
    for (int k = 0; k < n; ++k) {
      if (e(k) > 0.0 && c(k) / e(k) < t) {
        t = c(k) / e(k);
        arg = k;
      }
    }
    Eigen::VectorXd rest = c - t * e;
    if (arg >= 0) rest(arg) = 0.0;
    for (int k = 0; k < n; ++k) {
      if (rest(k) < kCoefficientDust) rest(k) = 0.0;
    }
    // Dividing dust by a tiny 1 - t would destroy completeness.
    const bool last = arg < 0 || rest.maxCoeff() <= 0.0;
    Povm leaf = leaf_povm(e);
    out.weights.push_back(last ? remaining : remaining * t);
    out.components.push_back(coarse_grain(leaf, ref.mapping, m));
    out.refined_components.push_back(std::move(leaf));
    if (last) break;
    c = rest / (1.0 - t);
    remaining *= 1.0 - t;
  }
  out.refinement_mapping = ref.mapping;

  // Merge components that coincide after grouping.
  Decomposition merged;
  merged.refinement_mapping = out.refinement_mapping;
  for (size_t j = 0; j < out.components.size(); ++j) {
    bool found = false;
    for (size_t k = 0; k < merged.components.size() && !found; ++k) {
      double diff = 0.0;
      for (int i = 0; i < m; ++i) {
        diff = std::max(diff, max_abs(merged.components[k][i] - out.components[j][i]));
      }
      bool same_leaf = true;
      for (int i = 0; i < n && same_leaf; ++i) {
        same_leaf = max_abs(merged.refined_components[k][i] - out.refined_components[j][i]) < 1e-12;
      }
      if (diff < 1e-12 && same_leaf) {
        merged.weights[k] += out.weights[j];
        found = true;
      }
    }
    if (!found) {
      merged.weights.push_back(out.weights[j]);
      merged.components.push_back(out.components[j]);
      merged.refined_components.push_back(out.refined_components[j]);
    }
  }
  return merged;
}

Povm sic_qubit() {
  std::vector<ComplexMatrix> els;
  ComplexMatrix z0 = ComplexMatrix::Zero(2, 2);
  z0(0, 0) = 0.5;
  els.push_back(z0);
  for (int k = 0; k < 3; ++k) {
    ComplexVector phi(2);
    phi(0) = std::sqrt(1.0 / 3.0);
    phi(1) = std::polar(std::sqrt(2.0 / 3.0), 2.0 * std::numbers::pi * k / 3.0);
    els.push_back(0.5 * phi * phi.adjoint());
  }
  return Povm(std::move(els));
}

Povm sic_qutrit() {
  const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  ComplexVector fid(3);
  fid << 0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  std::vector<ComplexMatrix> els;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      ComplexVector v(3);
      for (int k = 0; k < 3; ++k) {
        // X^a Z^b |fid>: Z multiplies |k> by w^(b k), X shifts |k> to |k+a>.
        v((k + a) % 3) = std::pow(w, b * k) * fid(k);
      }
      els.push_back(v * v.adjoint() / 3.0);
    }
  }
  return Povm(std::move(els));
}

Povm mub_qubit() {
  const double h = 1.0 / std::sqrt(2.0);
  ComplexVector plus(2), minus(2);
  plus << h, h;
  minus << h, -h;
  std::vector<ComplexMatrix> els(4, ComplexMatrix::Zero(2, 2));
  els[0](0, 0) = 0.5;
  els[1](1, 1) = 0.5;
  els[2] = 0.5 * plus * plus.adjoint();
  els[3] = 0.5 * minus * minus.adjoint();
  return Povm(std::move(els));
}

Povm vn_x_qubit() {
  const double h = 1.0 / std::sqrt(2.0);
  ComplexVector plus(2), minus(2);
  plus << h, h;
  minus << h, -h;
  return Povm({plus * plus.adjoint(), minus * minus.adjoint()});
}

Povm computational_basis(int d) {
  std::vector<ComplexMatrix> els(d, ComplexMatrix::Zero(d, d));
  for (int k = 0; k < d; ++k) els[k](k, k) = 1.0;
  return Povm(std::move(els));
}

Povm trivial_povm(int d, std::span<const double> weights) {
  check_probability_vector(weights);
  std::vector<ComplexMatrix> els;
  for (double w : weights) els.push_back(w * ComplexMatrix::Identity(d, d));
  return Povm(std::move(els));
}

Povm depolarize(const Povm &p, double mu) {
  if (!(mu >= 0.0 && mu <= 1.0)) {
    throw InvalidDistribution("depolarizing weight " + std::to_string(mu) + " outside [0, 1]");
  }
  const int d = p.dim();
  const double share = mu / p.size();
  std::vector<ComplexMatrix> els;
  for (const auto &e : p.elements()) {
    els.push_back((1.0 - mu) * e + share * ComplexMatrix::Identity(d, d));
  }
  return Povm(std::move(els));
}

bool is_sic(const Povm &p, double tol) {
  const int d = p.dim();
  if (p.size() != d * d || !is_rank_one(p)) return false;
  for (const auto &e : p.elements()) {
    if (std::abs(e.trace().real() - 1.0 / d) > tol) return false;
  }
  const double target = 1.0 / (d + 1);
  for (int i = 0; i < p.size(); ++i) {
    for (int j = i + 1; j < p.size(); ++j) {
      double overlap = (p[i] * p[j]).trace().real() * d * d;
      if (std::abs(overlap - target) > tol) return false;
    }
  }
  return true;
}

}  // namespace qintrinsic
