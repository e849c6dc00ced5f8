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

#include "qintrinsic/randomness.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qintrinsic/errors.h"
#include "qintrinsic/optim.h"
#include "qintrinsic/rng.h"
#include "roof.h"

namespace qintrinsic {

std::string to_string(Measure m) { return m == Measure::Rc ? "rc" : "rq"; }

std::string to_string(BoundType b) { return b == BoundType::Exact ? "Exact" : "UpperBound"; }

ComplexMatrix PureDecomposition::density() const {
  const int d = kets.empty() ? 0 : kets.front().dim();
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (size_t k = 0; k < kets.size(); ++k) out += weights[k] * kets[k].projector();
  return out;
}

DensityState block_dephase(const DensityState &rho, const Pvm &pvm) {
  if (rho.dim() != pvm.dim()) {
    throw DimensionMismatch("state dimension " + std::to_string(rho.dim()) + " differs from PVM dimension " +
                            std::to_string(pvm.dim()));
  }
  ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
  for (const auto &p : pvm.projectors()) out += p * rho.matrix() * p;
  return DensityState(0.5 * (out + out.adjoint()));
}

double r_q_pvm(const DensityState &rho, const Pvm &pvm) {
  return std::max(0.0, von_neumann_entropy(block_dephase(rho, pvm)) - von_neumann_entropy(rho));
}

double r_c_pure_pvm(const Ket &psi, const Pvm &pvm) {
  if (psi.dim() != pvm.dim()) throw DimensionMismatch("ket and PVM dimensions differ");
  std::vector<double> p;
  for (const auto &proj : pvm.projectors()) {
    p.push_back(std::max(0.0, std::real(psi.amplitudes().dot(proj * psi.amplitudes()))));
  }
  return entropy_terms(p);
}

RandomnessReport r_c_pvm(const DensityState &rho, const Pvm &pvm, const OptimizerConfig &cfg) {
  if (rho.dim() != pvm.dim()) throw DimensionMismatch("state and PVM dimensions differ");
  detail::RoofResult roof = detail::born_convex_roof(rho.matrix(), pvm.projectors(), cfg);
  RandomnessReport rep;
  rep.value = roof.value;
  rep.bound_type = roof.exact ? BoundType::Exact : BoundType::UpperBound;
  rep.ensemble = roof.ensemble();
  return rep;
}

double born_entropy(const Ket &psi, const Povm &p) {
  if (psi.dim() != p.dim()) throw DimensionMismatch("ket and POVM dimensions differ");
  return std::max(0.0, entropy_terms(p.probabilities(psi.amplitudes())));
}

double r_q_direct(const DensityState &rho, const Povm &p) {
  if (rho.dim() != p.dim()) throw DimensionMismatch("state and POVM dimensions differ");
  ComplexMatrix root = matrix_sqrt_psd(rho.matrix());
  double total = 0.0;
  for (const auto &e : p.elements()) {
    if (is_zero_element(e)) continue;
    // sqrt(N) rho sqrt(N) and rho^1/2 N rho^1/2 share their spectrum.
    ComplexMatrix y = root * e * root;
    total += psd_entropy(0.5 * (y + y.adjoint()));
  }
  return std::max(0.0, total - von_neumann_entropy(rho));
}

RandomnessReport r_c_direct(const DensityState &rho, const Povm &p, const OptimizerConfig &cfg) {
  if (rho.dim() != p.dim()) throw DimensionMismatch("state and POVM dimensions differ");
  detail::RoofResult roof = detail::born_convex_roof(rho.matrix(), p.elements(), cfg);
  RandomnessReport rep;
  rep.value = roof.value;
  rep.bound_type = roof.exact ? BoundType::Exact : BoundType::UpperBound;
  rep.ensemble = roof.ensemble();
  return rep;
}

RandomnessReport r_extremal(const DensityState &rho, const Povm &p, Measure measure, const OptimizerConfig &cfg) {
  ExtremalityVerdict verdict = extremality_check(p);
  if (verdict.status == Extremality::NotExtremal) throw NotExtremalInput();
  NaimarkExtension ext = canonical_extension(p);
  DensityState dilated = embed_state(rho, ext);
  RandomnessReport rep;
  if (measure == Measure::Rq) {
    rep.value = r_q_pvm(dilated, ext.pvm);
    rep.bound_type = BoundType::Exact;
  } else {
    rep = r_c_pvm(dilated, ext.pvm, cfg);
    // Report the ensemble on the system: |psi> (x) |0> -> |psi>.
    if (rep.ensemble) {
      PureDecomposition sys;
      for (size_t k = 0; k < rep.ensemble->kets.size(); ++k) {
        const ComplexVector &big = rep.ensemble->kets[k].amplitudes();
        ComplexVector small(ext.system_dim);
        for (int a = 0; a < ext.system_dim; ++a) small(a) = big(a * ext.ancilla_dim + ext.ancilla_index);
        sys.weights.push_back(rep.ensemble->weights[k]);
        sys.kets.push_back(Ket::normalized(small));
      }
      rep.ensemble = std::move(sys);
    }
  }
  if (verdict.status == Extremality::Inconclusive) {
    rep.notes.push_back("extremality inconclusive: elements are independent but not all rank one");
  }
  return rep;
}

RandomnessReport min_randomness(const Povm &p, Measure measure, const OptimizerConfig &cfg) {
  const int d = p.dim();
  const bool extremal = extremality_check(p).status == Extremality::Extremal;
  OptimizerConfig inner = cfg;
  inner.restarts = std::min(cfg.restarts, 2);
  inner.max_iterations = std::min(cfg.max_iterations, 300);

  auto evaluate = [&](const ComplexVector &v) {
    Ket psi = Ket::normalized(v);
    if (extremal) return born_entropy(psi, p);
    return r_cf(DensityState::from_ket(psi), p, measure, inner).value;
  };
  auto pack = [&](const ComplexVector &v) {
    Eigen::VectorXd x(2 * d);
    for (int k = 0; k < d; ++k) {
      x(2 * k) = v(k).real();
      x(2 * k + 1) = v(k).imag();
    }
    return x;
  };
  auto unpack = [&](const Eigen::VectorXd &x) {
    ComplexVector v(d);
    for (int k = 0; k < d; ++k) v(k) = Complex(x(2 * k), x(2 * k + 1));
    return v;
  };
  auto objective = [&](const Eigen::VectorXd &x) {
    ComplexVector v = unpack(x);
    if (v.norm() < 1e-8) return std::numeric_limits<double>::infinity();
    return evaluate(v);
  };

  // Candidate starts: basis states, eigenvectors of every element, random kets.
  std::vector<ComplexVector> candidates;
  for (int k = 0; k < d; ++k) candidates.push_back(Ket::basis(d, k).amplitudes());
  for (const auto &e : p.elements()) {
    if (is_zero_element(e)) continue;
    Eigensystem es = hermitian_eig(e);
    for (int k = 0; k < d; ++k) candidates.push_back(es.vectors.col(k));
  }
  Rng rng(cfg.seed);
  for (int k = 0; k < cfg.restarts; ++k) {
    Rng sub = rng.substream(static_cast<std::uint64_t>(k));
    ComplexVector v(d);
    for (int a = 0; a < d; ++a) v(a) = sub.complex_normal();
    candidates.push_back(v / v.norm());
  }
  std::vector<std::pair<double, int>> scored;
  for (size_t k = 0; k < candidates.size(); ++k) {
    scored.emplace_back(evaluate(candidates[k]), static_cast<int>(k));
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto &a, const auto &b) { return a.first < b.first; });

  const int polish = extremal ? std::min<int>(8, static_cast<int>(scored.size())) : 1;
  double best = scored.front().first;
  ComplexVector best_v = candidates[scored.front().second];
  NelderMeadOptions nm;
  nm.max_evaluations = extremal ? 400 * d : 60 * d;
  nm.initial_step = 0.2;
  nm.tol = 1e-12;
  for (int k = 0; k < polish; ++k) {
    MinimizeResult res = nelder_mead(objective, pack(candidates[scored[k].second]), nm);
    // Restart once from the optimum with a smaller simplex.
    NelderMeadOptions fine = nm;
    fine.initial_step = 0.01;
    MinimizeResult res2 = nelder_mead(objective, res.x, fine);
    if (res2.value < res.value) res = res2;
    if (res.value < best) {
      best = res.value;
      best_v = unpack(res.x);
    }
  }
  // Fix the global phase: largest amplitude real and positive.
  Eigen::Index lead = 0;
  best_v.cwiseAbs().maxCoeff(&lead);
  best_v *= std::polar(1.0, -std::arg(best_v(lead)));
  Ket argmin = Ket::normalized(best_v);
  RandomnessReport rep;
  rep.value = std::max(0.0, best);
  rep.bound_type = BoundType::UpperBound;
  rep.ensemble = PureDecomposition{{1.0}, {argmin}};
  if (measure == Measure::Rq) {
    rep.notes.push_back("minimum over pure inputs only; an upper bound on the infimum over mixed states");
  }
  if (!extremal) rep.notes.push_back("non-extremal POVM: values from r_cf with a reduced inner search");
  return rep;
}

bool is_non_random_pure(const Ket &psi, const Povm &p) {
  if (psi.dim() != p.dim()) throw DimensionMismatch("ket and POVM dimensions differ");
  const ComplexVector &v = psi.amplitudes();
  for (const auto &e : p.elements()) {
    ComplexVector mv = e * v;
    Complex lam = v.dot(mv);
    if ((mv - lam * v).norm() >= 1e-8) return false;
  }
  return true;
}

bool check_nonrandom_condition(const DensityState &rho, const Decomposition &dec) {
  for (const auto &n : dec.components) {
    if (n.dim() != rho.dim()) throw DimensionMismatch("component and state dimensions differ");
    for (int i = 0; i < n.size(); ++i) {
      ComplexMatrix left = n[i] * rho.matrix();
      for (int k = 0; k < n.size(); ++k) {
        if (k == i) continue;
        if (max_abs(left * n[k]) >= 1e-8) return false;
      }
    }
  }
  return true;
}

double rastegin_bound(const DensityState &rho) {
  const double d = rho.dim();
  return std::log2(d * (d + 1.0) / (rho.purity() + 1.0));
}

double sic_lower_bound(int d) { return std::log2((d + 1.0) / 2.0); }

double mixed_upper_bound(int d) { return std::log2(static_cast<double>(d)); }

bool commutation_check(const DensityState &rho, const Povm &p) {
  if (rho.dim() != p.dim()) throw DimensionMismatch("state and POVM dimensions differ");
  for (const auto &e : p.elements()) {
    if (max_abs(rho.matrix() * e - e * rho.matrix()) >= 1e-8) return false;
  }
  return true;
}

}  // namespace qintrinsic
