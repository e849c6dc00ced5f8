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

// Decomposition search for the convex-roof randomness of a POVM.
//
// A decomposition p = sum_j r_j N^j is written as T^j_i = r_j N^j_i =
// A_i C_ji A_i^dagger with A_i A_i^dagger = M_i and C_ji PSD on supp(M_i).
// Feasibility is the pair of linear constraints
//   sum_j C_ji = 1                       (reconstruction of M_i)
//   sum_i A_i C_ji A_i^dagger ~ 1        (each N^j is a POVM).
// The search runs over factors C_ji = L L^dagger with an augmented
// Lagrangian for the linear part; the final point is projected onto the
// affine constraint set and pulled toward the trivial decomposition until
// every block is PSD.

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <optional>

#include "qintrinsic/errors.h"
#include "qintrinsic/optim.h"
#include "qintrinsic/oracle.h"
#include "qintrinsic/randomness.h"
#include "qintrinsic/rng.h"
#include "roof.h"

namespace qintrinsic {

namespace {

using Blocks = std::vector<std::vector<ComplexMatrix>>;  // [component][element]

constexpr double kSupportCutoff = 1e-10;
constexpr double kFeasible = 1e-6;
// The exact repair absorbs residuals below this.
constexpr double kRepairable = 1e-7;

class CfProblem {
 public:
  CfProblem(const DensityState &rho, const Povm &p, Measure measure, int terms)
      : rho_(rho), p_(p), d_(p.dim()), m_(p.size()), k_(terms) {
    for (int i = 0; i < m_; ++i) {
      Eigensystem es = hermitian_eig(p[i]);
      int s = 0;
      while (s < d_ && es.values[s] > kSupportCutoff) ++s;
      ComplexMatrix a(d_, s), pinv(s, d_);
      for (int c = 0; c < s; ++c) {
        a.col(c) = std::sqrt(es.values[c]) * es.vectors.col(c);
        pinv.row(c) = es.vectors.col(c).adjoint() / std::sqrt(es.values[c]);
      }
      a_.push_back(a);
      a_pinv_.push_back(pinv);
      s_.push_back(s);
    }
    offset_.resize(static_cast<size_t>(k_) * m_);
    Eigen::Index off = 0;
    for (int j = 0; j < k_; ++j) {
      for (int i = 0; i < m_; ++i) {
        offset_[j * m_ + i] = off;
        off += 2 * s_[i] * s_[i];
      }
    }
    nparams_ = off;
    eigen_rank_ = 0;
    for (double v : hermitian_eigenvalues(rho.matrix())) {
      if (v > 1e-12) ++eigen_rank_;
    }
    quantum_ = measure == Measure::Rq && eigen_rank_ > 1;
    if (quantum_) {
      for (int i = 0; i < m_; ++i) {
        ComplexMatrix h = a_[i].adjoint() * rho.matrix() * a_[i];
        h_.push_back(0.5 * (h + h.adjoint()));
      }
    }
    if (eigen_rank_ == 1) {
      Eigensystem es = hermitian_eig(rho.matrix());
      set_ensembles(std::vector<ComplexMatrix>(k_, es.vectors.leftCols(1)));
    }
    reset_multipliers(1.0);
  }

  Eigen::Index size() const { return nparams_; }
  int terms() const { return k_; }
  bool pure() const { return eigen_rank_ == 1; }
  bool quantum() const { return quantum_; }
  double rho_entropy() const { return von_neumann_entropy(rho_); }

  // Unnormalized ensemble vectors (columns) for every component; used by
  // every objective except the mixed-state Rq one.
  void set_ensembles(const std::vector<ComplexMatrix> &vectors) {
    b_.assign(k_, {});
    for (int j = 0; j < k_; ++j) {
      const ComplexMatrix &v = vectors[std::min<size_t>(j, vectors.size() - 1)];
      for (Eigen::Index c = 0; c < v.cols(); ++c) {
        std::vector<ComplexVector> per;
        for (int i = 0; i < m_; ++i) per.push_back(a_[i].adjoint() * v.col(c));
        b_[j].push_back(std::move(per));
      }
    }
  }

  void reset_multipliers(double penalty) {
    lam_a_.assign(m_, {});
    for (int i = 0; i < m_; ++i) lam_a_[i] = ComplexMatrix::Zero(s_[i], s_[i]);
    lam_b_.assign(k_, ComplexMatrix::Zero(d_, d_));
    penalty_ = penalty;
  }

  double penalty() const { return penalty_; }
  void set_penalty(double w) { penalty_ = w; }

  ComplexMatrix factor(const Eigen::VectorXd &x, int j, int i) const {
    const int s = s_[i];
    ComplexMatrix l(s, s);
    const double *ptr = x.data() + offset_[j * m_ + i];
    for (int c = 0; c < s * s; ++c) l(c % s, c / s) = Complex(ptr[2 * c], ptr[2 * c + 1]);
    return l;
  }

  void store(Eigen::VectorXd &x, int j, int i, const ComplexMatrix &l) const {
    const int s = s_[i];
    double *ptr = x.data() + offset_[j * m_ + i];
    for (int c = 0; c < s * s; ++c) {
      ptr[2 * c] = l(c % s, c / s).real();
      ptr[2 * c + 1] = l(c % s, c / s).imag();
    }
  }

  Blocks gram(const Eigen::VectorXd &x) const {
    Blocks c(k_, std::vector<ComplexMatrix>(m_));
    for (int j = 0; j < k_; ++j) {
      for (int i = 0; i < m_; ++i) {
        ComplexMatrix l = factor(x, j, i);
        c[j][i] = l * l.adjoint();
      }
    }
    return c;
  }

  // Constraint residuals h_a (per element) and h_b (per component).
  void residuals(const Blocks &c, std::vector<ComplexMatrix> &ha, std::vector<ComplexMatrix> &hb) const {
    ha.assign(m_, {});
    for (int i = 0; i < m_; ++i) ha[i] = -ComplexMatrix::Identity(s_[i], s_[i]);
    hb.assign(k_, {});
    for (int j = 0; j < k_; ++j) {
      ComplexMatrix x = ComplexMatrix::Zero(d_, d_);
      for (int i = 0; i < m_; ++i) {
        if (s_[i] == 0) continue;
        ha[i] += c[j][i];
        x += a_[i] * c[j][i] * a_[i].adjoint();
      }
      hb[j] = x - (x.trace().real() / d_) * ComplexMatrix::Identity(d_, d_);
    }
  }

  double max_residual(const Eigen::VectorXd &x) const {
    std::vector<ComplexMatrix> ha, hb;
    residuals(gram(x), ha, hb);
    double r = 0.0;
    for (const auto &h : ha) r = std::max(r, max_abs(h));
    for (const auto &h : hb) r = std::max(r, max_abs(h));
    return r;
  }

  void update_multipliers(const Eigen::VectorXd &x) {
    std::vector<ComplexMatrix> ha, hb;
    residuals(gram(x), ha, hb);
    for (int i = 0; i < m_; ++i) lam_a_[i] += penalty_ * ha[i];
    for (int j = 0; j < k_; ++j) lam_b_[j] += penalty_ * hb[j];
  }

  // Objective part of sum_j r_j R(rho, N^j), without the constant -S(rho).
  double entropy_part(const Eigen::VectorXd &x, std::vector<std::vector<ComplexMatrix>> *grad) const {
    double f = 0.0;
    for (int j = 0; j < k_; ++j) {
      std::vector<ComplexMatrix> l(m_);
      for (int i = 0; i < m_; ++i) l[i] = factor(x, j, i);
      if (quantum_) {
        double total = 0.0;
        for (int i = 0; i < m_; ++i) {
          if (s_[i] == 0) continue;
          ComplexMatrix hl = h_[i] * l[i];
          ComplexMatrix z = l[i].adjoint() * hl;
          Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (z + z.adjoint()));
          Eigen::VectorXd ev = es.eigenvalues();
          Eigen::VectorXd dv(ev.size());
          for (Eigen::Index k = 0; k < ev.size(); ++k) {
            f += detail::phi(ev(k));
            dv(k) = detail::dphi(ev(k));
            total += std::max(0.0, ev(k));
          }
          if (grad) {
            (*grad)[j][i] += 2.0 * hl * (es.eigenvectors() * dv.asDiagonal() * es.eigenvectors().adjoint());
          }
        }
        f -= detail::phi(total);
        if (grad) {
          const double ds = detail::dphi(total);
          for (int i = 0; i < m_; ++i) {
            if (s_[i] > 0) (*grad)[j][i] -= 2.0 * ds * (h_[i] * l[i]);
          }
        }
      } else {
        for (const auto &per : b_[j]) {
          std::vector<ComplexVector> lb(m_);
          std::vector<double> tau(m_, 0.0);
          double sigma = 0.0;
          for (int i = 0; i < m_; ++i) {
            if (s_[i] == 0) continue;
            lb[i] = l[i].adjoint() * per[i];
            tau[i] = lb[i].squaredNorm();
            sigma += tau[i];
            f += detail::phi(tau[i]);
          }
          f -= detail::phi(sigma);
          if (grad) {
            const double ds = detail::dphi(sigma);
            for (int i = 0; i < m_; ++i) {
              if (s_[i] == 0) continue;
              (*grad)[j][i] += 2.0 * (detail::dphi(tau[i]) - ds) * per[i] * lb[i].adjoint();
            }
          }
        }
      }
    }
    return f;
  }

  double lagrangian(const Eigen::VectorXd &x, Eigen::VectorXd *grad) const {
    std::vector<std::vector<ComplexMatrix>> g;
    if (grad) {
      g.assign(k_, std::vector<ComplexMatrix>(m_));
      for (int j = 0; j < k_; ++j) {
        for (int i = 0; i < m_; ++i) g[j][i] = ComplexMatrix::Zero(s_[i], s_[i]);
      }
    }
    double f = entropy_part(x, grad ? &g : nullptr);
    Blocks c = gram(x);
    std::vector<ComplexMatrix> ha, hb;
    residuals(c, ha, hb);
    const double w = penalty_;
    std::vector<ComplexMatrix> ga(m_), gb(k_);
    for (int i = 0; i < m_; ++i) {
      f += (lam_a_[i] * ha[i]).trace().real() + 0.5 * w * ha[i].squaredNorm();
      ga[i] = lam_a_[i] + w * ha[i];
    }
    for (int j = 0; j < k_; ++j) {
      f += (lam_b_[j] * hb[j]).trace().real() + 0.5 * w * hb[j].squaredNorm();
      gb[j] = lam_b_[j] + w * hb[j];
    }
    if (grad) {
      grad->resize(nparams_);
      for (int j = 0; j < k_; ++j) {
        for (int i = 0; i < m_; ++i) {
          if (s_[i] == 0) continue;
          ComplexMatrix gamma = ga[i] + a_[i].adjoint() * gb[j] * a_[i];
          ComplexMatrix l = factor(x, j, i);
          g[j][i] += 2.0 * gamma * l;
          store(*grad, j, i, g[j][i]);
        }
      }
    }
    return f;
  }

  Eigen::VectorXd random_point(Rng &rng) const {
    Eigen::VectorXd x(nparams_);
    for (int j = 0; j < k_; ++j) {
      for (int i = 0; i < m_; ++i) {
        const int s = s_[i];
        if (s == 0) continue;
        ComplexMatrix l(s, s);
        const double scale = 1.0 / std::sqrt(static_cast<double>(k_) * s);
        for (int c = 0; c < s * s; ++c) l(c % s, c / s) = scale * rng.complex_normal();
        store(x, j, i, l);
      }
    }
    return x;
  }

  // Factors reproducing a decomposition, split or merged to k components,
  // plus a small perturbation to break the symmetry between copies.
  Eigen::VectorXd from_decomposition(const Decomposition &dec, Rng &rng, double noise) const {
    std::vector<double> w = dec.weights;
    std::vector<std::vector<ComplexMatrix>> t;
    for (size_t j = 0; j < dec.components.size(); ++j) {
      std::vector<ComplexMatrix> row;
      for (int i = 0; i < m_; ++i) {
        row.push_back(i < dec.components[j].size() ? ComplexMatrix(w[j] * dec.components[j][i])
                                                    : ComplexMatrix::Zero(d_, d_));
      }
      t.push_back(std::move(row));
    }
    while (static_cast<int>(t.size()) > k_) {
      for (int i = 0; i < m_; ++i) t[k_ - 1][i] += t.back()[i];
      w[k_ - 1] += w.back();
      t.pop_back();
      w.pop_back();
    }
    while (static_cast<int>(t.size()) < k_) {
      size_t big = std::max_element(w.begin(), w.end()) - w.begin();
      for (auto &e : t[big]) e *= 0.5;
      w[big] *= 0.5;
      t.push_back(t[big]);
      w.push_back(w[big]);
    }
    Eigen::VectorXd x = Eigen::VectorXd::Zero(nparams_);
    for (int j = 0; j < k_; ++j) {
      for (int i = 0; i < m_; ++i) {
        const int s = s_[i];
        if (s == 0) continue;
        ComplexMatrix c = a_pinv_[i] * t[j][i] * a_pinv_[i].adjoint();
        ComplexMatrix l = matrix_sqrt_psd(0.5 * (c + c.adjoint()));
        const double scale = noise / std::sqrt(static_cast<double>(k_) * s);
        for (int e = 0; e < s * s; ++e) l(e % s, e / s) += scale * rng.complex_normal();
        store(x, j, i, l);
      }
    }
    return x;
  }

  // Exact feasible decomposition near x, or nothing if the repair fails.
  std::optional<Decomposition> extract(const Eigen::VectorXd &x) const {
    Blocks c = gram(x);
    project(c);
    // Blend with the trivial decomposition C = 1/k until all blocks are PSD.
    auto blended = [&](double alpha) {
      Blocks out = c;
      for (int j = 0; j < k_; ++j) {
        for (int i = 0; i < m_; ++i) {
          out[j][i] = alpha * c[j][i] + ((1.0 - alpha) / k_) * ComplexMatrix::Identity(s_[i], s_[i]);
        }
      }
      return out;
    };
    auto min_eig = [&](const Blocks &b) {
      double lo = std::numeric_limits<double>::infinity();
      for (const auto &row : b) {
        for (const auto &blk : row) {
          if (blk.size() == 0) continue;
          Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (blk + blk.adjoint()), Eigen::EigenvaluesOnly);
          lo = std::min(lo, es.eigenvalues().minCoeff());
        }
      }
      return lo;
    };
    double alpha = 1.0;
    if (min_eig(c) < 0.0) {
      double lo = 0.0, hi = 1.0;
      for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        (min_eig(blended(mid)) >= 0.0 ? lo : hi) = mid;
      }
      alpha = lo;
    }
    Blocks fin = alpha == 1.0 ? c : blended(alpha);

    Decomposition dec;
    std::vector<std::vector<ComplexMatrix>> comps;
    for (int j = 0; j < k_; ++j) {
      std::vector<ComplexMatrix> t(m_);
      ComplexMatrix sum = ComplexMatrix::Zero(d_, d_);
      for (int i = 0; i < m_; ++i) {
        t[i] = s_[i] == 0 ? ComplexMatrix::Zero(d_, d_) : ComplexMatrix(a_[i] * fin[j][i] * a_[i].adjoint());
        t[i] = (0.5 * (t[i] + t[i].adjoint())).eval();
        sum += t[i];
      }
      double r = sum.trace().real() / d_;
      if (r <= 1e-12) continue;
      ComplexMatrix fix = matrix_sqrt_psd(sum / r).inverse();
      for (auto &e : t) e = fix * (e / r) * fix;
      dec.weights.push_back(r);
      comps.push_back(std::move(t));
    }
    double total = 0.0;
    for (double r : dec.weights) total += r;
    for (double &r : dec.weights) r /= total;
    try {
      for (auto &t : comps) dec.components.emplace_back(std::move(t));
    } catch (const Error &) {
      return std::nullopt;
    }
    if (verify_decomposition(dec, p_) > kFeasible) return std::nullopt;
    return dec;
  }

 private:
  // Least-norm correction onto the affine constraint set, in isometric
  // real coordinates of the blocks.
  void project(Blocks &c) const {
    if (!projector_) build_projector();
    Eigen::VectorXd y(cols_);
    Eigen::Index pos = 0;
    for (int j = 0; j < k_; ++j) {
      for (int i = 0; i < m_; ++i) {
        if (s_[i] == 0) continue;
        y.segment(pos, s_[i] * s_[i]) = hermitian_to_real(c[j][i], true);
        pos += s_[i] * s_[i];
      }
    }
    Eigen::VectorXd delta = projector_->solve(constraint_ * y - target_);
    y -= delta;
    pos = 0;
    for (int j = 0; j < k_; ++j) {
      for (int i = 0; i < m_; ++i) {
        if (s_[i] == 0) continue;
        c[j][i] = real_to_hermitian(y.segment(pos, s_[i] * s_[i]), s_[i], true);
        pos += s_[i] * s_[i];
      }
    }
  }

  void build_projector() const {
    int per = 0;
    for (int s : s_) per += s * s;
    cols_ = static_cast<Eigen::Index>(k_) * per;
    const Eigen::Index rows = per + static_cast<Eigen::Index>(k_) * d_ * d_;
    constraint_ = Eigen::MatrixXd::Zero(rows, cols_);
    target_ = Eigen::VectorXd::Zero(rows);
    Eigen::Index row_a = 0;
    std::vector<Eigen::Index> start_a(m_);
    for (int i = 0; i < m_; ++i) {
      start_a[i] = row_a;
      if (s_[i] > 0) target_.segment(row_a, s_[i] * s_[i]) = hermitian_to_real(ComplexMatrix::Identity(s_[i], s_[i]), true);
      row_a += s_[i] * s_[i];
    }
    Eigen::Index col = 0;
    for (int j = 0; j < k_; ++j) {
      const Eigen::Index row_b = per + static_cast<Eigen::Index>(j) * d_ * d_;
      for (int i = 0; i < m_; ++i) {
        const int s = s_[i];
        for (int e = 0; e < s * s; ++e, ++col) {
          Eigen::VectorXd unit = Eigen::VectorXd::Zero(s * s);
          unit(e) = 1.0;
          ComplexMatrix basis = real_to_hermitian(unit, s, true);
          constraint_(start_a[i] + e, col) = 1.0;
          ComplexMatrix image = a_[i] * basis * a_[i].adjoint();
          image -= (image.trace().real() / d_) * ComplexMatrix::Identity(d_, d_);
          constraint_.block(row_b, col, d_ * d_, 1) = hermitian_to_real(image, true);
        }
      }
    }
    projector_ = std::make_unique<Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd>>(constraint_);
  }

  const DensityState &rho_;
  const Povm &p_;
  int d_;
  int m_;
  int k_;
  std::vector<ComplexMatrix> a_;
  std::vector<ComplexMatrix> a_pinv_;
  std::vector<int> s_;
  std::vector<Eigen::Index> offset_;
  Eigen::Index nparams_ = 0;
  int eigen_rank_ = 0;
  bool quantum_ = false;
  std::vector<ComplexMatrix> h_;
  std::vector<std::vector<std::vector<ComplexVector>>> b_;  // [j][ensemble member][i]
  std::vector<ComplexMatrix> lam_a_;
  std::vector<ComplexMatrix> lam_b_;
  double penalty_ = 1.0;
  mutable Eigen::MatrixXd constraint_;
  mutable Eigen::VectorXd target_;
  mutable Eigen::Index cols_ = 0;
  mutable std::unique_ptr<Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd>> projector_;
};

// Randomness of every component of a decomposition.
struct Scored {
  double value = std::numeric_limits<double>::infinity();
  Decomposition dec;
  std::vector<ComplexMatrix> ensembles;  // per component, for Rc on mixed states
};

class Evaluator {
 public:
  Evaluator(const DensityState &rho, Measure measure, const OptimizerConfig &cfg)
      : rho_(rho), measure_(measure), cfg_(cfg) {
    Eigensystem es = hermitian_eig(rho.matrix());
    pure_ = es.values.size() < 2 || es.values[1] <= 1e-12;
    if (pure_) psi_ = Ket::normalized(es.vectors.col(0));
    inner_ = cfg;
    inner_.restarts = std::min(cfg.restarts, 4);
    inner_.decomposition_terms = 0;
  }

  bool pure() const { return pure_; }

  Scored score(Decomposition dec, const std::vector<ComplexMatrix> *warm = nullptr) const {
    Scored out;
    out.value = 0.0;
    for (size_t j = 0; j < dec.components.size(); ++j) {
      const Povm &n = dec.components[j];
      double r;
      if (pure_) {
        r = born_entropy(*psi_, n);
      } else if (measure_ == Measure::Rq) {
        r = r_q_direct(rho_, n);
      } else {
        const ComplexMatrix *w = warm && j < warm->size() ? &(*warm)[j] : nullptr;
        detail::RoofResult roof = detail::born_convex_roof(rho_.matrix(), n.elements(), inner_, w);
        r = roof.value;
        out.ensembles.push_back(roof.vectors);
      }
      out.value += dec.weights[j] * r;
    }
    out.dec = std::move(dec);
    return out;
  }

 private:
  const DensityState &rho_;
  Measure measure_;
  OptimizerConfig cfg_;
  OptimizerConfig inner_;
  bool pure_ = false;
  std::optional<Ket> psi_;
};

// p = (1 - mu) base + sum_i c_i (deterministic outcome i), with c_i the
// smallest eigenvalue of M_i.
std::optional<Decomposition> identity_split(const Povm &p, const DensityState &rho) {
  const int d = p.dim();
  const int m = p.size();
  std::vector<double> c(m);
  double mu = 0.0;
  for (int i = 0; i < m; ++i) {
    c[i] = std::max(0.0, hermitian_eigenvalues(p[i]).back());
    mu += c[i];
  }
  if (mu <= 1e-9) return std::nullopt;
  Decomposition dec;
  if (mu < 1.0 - 1e-9) {
    std::vector<ComplexMatrix> base(m);
    for (int i = 0; i < m; ++i) {
      base[i] = (p[i] - c[i] * ComplexMatrix::Identity(d, d)) / (1.0 - mu);
    }
    Decomposition inner = extremal_decompose(Povm(std::move(base)), rho.matrix());
    for (size_t j = 0; j < inner.weights.size(); ++j) {
      dec.weights.push_back((1.0 - mu) * inner.weights[j]);
      dec.components.push_back(inner.components[j]);
    }
  }
  for (int i = 0; i < m; ++i) {
    if (c[i] <= 0.0) continue;
    std::vector<ComplexMatrix> det(m, ComplexMatrix::Zero(d, d));
    det[i] = ComplexMatrix::Identity(d, d);
    dec.weights.push_back(c[i] / (mu < 1.0 - 1e-9 ? 1.0 : mu));
    dec.components.emplace_back(std::move(det));
  }
  return dec;
}

}  // namespace

RandomnessReport r_cf(const DensityState &rho, const Povm &p, Measure measure, const OptimizerConfig &cfg) {
  if (rho.dim() != p.dim()) throw DimensionMismatch("state and POVM dimensions differ");
  const int d = p.dim();
  const int m = p.size();
  Evaluator evaluator(rho, measure, cfg);
  RandomnessReport rep;
  rep.bound_type = BoundType::UpperBound;

  auto finish = [&](Scored best) {
    rep.value = std::max(0.0, best.value);
    rep.decomposition = std::move(best.dec);
    return rep;
  };

  // An extremal POVM has only the trivial decomposition.
  if (extremality_check(p).status == Extremality::Extremal) {
    Scored only = evaluator.score(Decomposition{{1.0}, {p}, {}, {}});
    if (evaluator.pure() || measure == Measure::Rq) rep.bound_type = BoundType::Exact;
    rep.notes.push_back("extremal POVM: trivial decomposition");
    return finish(std::move(only));
  }

  std::vector<Decomposition> seeds;
  seeds.push_back(extremal_decompose(p, rho.matrix()));
  if (auto split = identity_split(p, rho)) seeds.push_back(std::move(*split));

  Scored best;
  for (auto &s : seeds) {
    Scored sc = evaluator.score(s);
    if (sc.value < best.value - 1e-12) best = std::move(sc);
  }
  if (best.value <= 1e-12) {
    rep.notes.push_back("seed decomposition is already deterministic on the input");
    return finish(std::move(best));
  }

  const int terms = cfg.decomposition_terms > 0 ? cfg.decomposition_terms : m * d * d;
  CfProblem problem(rho, p, measure, terms);
  Rng rng(cfg.seed);
  LbfgsOptions lo;
  lo.max_iterations = cfg.max_iterations;
  lo.gradient_tol = 1e-10;
  lo.value_tol = 1e-14;
  const int rounds = (!evaluator.pure() && measure == Measure::Rc) ? 3 : 1;

  for (int run = 0; run < std::max(cfg.restarts, 1); ++run) {
    Rng sub = rng.substream(static_cast<std::uint64_t>(run));
    Eigen::VectorXd x;
    std::vector<ComplexMatrix> ensembles;
    if (run < static_cast<int>(seeds.size())) {
      x = problem.from_decomposition(seeds[run], sub, 1e-3);
    } else {
      x = problem.random_point(sub);
    }
    if (rounds > 1) {
      // Start from the eigen-ensemble of rho for every component.
      Eigensystem es = hermitian_eig(rho.matrix());
      ComplexMatrix v(d, d);
      for (int k = 0; k < d; ++k) v.col(k) = std::sqrt(std::max(0.0, es.values[k])) * es.vectors.col(k);
      ensembles.assign(problem.terms(), v);
    }
    for (int round = 0; round < rounds; ++round) {
      if (rounds > 1) problem.set_ensembles(ensembles);
      problem.reset_multipliers(cfg.penalty_weight * 1e-2);
      double prev = std::numeric_limits<double>::infinity();
      for (int outer = 0; outer < 30; ++outer) {
        auto f = [&](const Eigen::VectorXd &z, Eigen::VectorXd *g) { return problem.lagrangian(z, g); };
        x = lbfgs(f, x, lo).x;
        double h = problem.max_residual(x);
        if (h < kRepairable) break;
        problem.update_multipliers(x);
        if (h > 0.25 * prev) problem.set_penalty(std::min(problem.penalty() * 10.0, cfg.penalty_weight * 1e4));
        prev = h;
      }
      auto dec = problem.extract(x);
      if (!dec) break;
      Scored sc = evaluator.score(*dec, rounds > 1 && round > 0 ? &ensembles : nullptr);
      if (rounds > 1) {
        // Map the ensembles back onto the (possibly pruned) component slots.
        ensembles.assign(problem.terms(), sc.ensembles.empty() ? ComplexMatrix() : sc.ensembles.front());
        for (size_t j = 0; j < sc.ensembles.size() && j < ensembles.size(); ++j) ensembles[j] = sc.ensembles[j];
      }
      if (sc.value < best.value - 1e-12) best = std::move(sc);
    }
  }
  if (!std::isfinite(best.value)) throw NoFeasiblePoint(std::numeric_limits<double>::infinity());
  return finish(std::move(best));
}

}  // namespace qintrinsic
