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

#ifndef QINTRINSIC_POVM_H_
#define QINTRINSIC_POVM_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qintrinsic/linalg.h"

namespace qintrinsic {

/// Elements with trace below this are treated as zero.
inline constexpr double kZeroElementTrace = 1e-10;

/// Positive operator-valued measure: PSD elements summing to the identity.
/// Zero elements are allowed and keep their position.
class Povm {
 public:
  /// Validates; throws NotHermitian, NotPsd, IncompleteSum or DimensionMismatch.
  explicit Povm(std::vector<ComplexMatrix> elements);

  int dim() const { return static_cast<int>(elements_.front().rows()); }
  int size() const { return static_cast<int>(elements_.size()); }
  const ComplexMatrix &operator[](int i) const { return elements_[i]; }
  const std::vector<ComplexMatrix> &elements() const { return elements_; }

  /// Born probabilities <psi|M_i|psi>.
  std::vector<double> probabilities(const ComplexVector &psi) const;

 private:
  std::vector<ComplexMatrix> elements_;
};

/// Residuals of every POVM invariant, without throwing.
struct PovmDiagnostics {
  double hermitian_residual = 0.0;
  int hermitian_worst = -1;
  double min_eigenvalue = 0.0;
  int min_eigenvalue_index = -1;
  double completeness_residual = 0.0;
};

PovmDiagnostics diagnose(std::span<const ComplexMatrix> elements);

/// Throws the first violated invariant: Hermiticity, then positivity, then
/// completeness.
void validate(std::span<const ComplexMatrix> elements, double tol = kTolerance);

bool is_zero_element(const ComplexMatrix &m);

/// True iff every nonzero element has exactly one eigenvalue above 1e-9.
bool is_rank_one(const Povm &p);

enum class Extremality { Extremal, NotExtremal, Inconclusive };
std::string to_string(Extremality e);

struct ExtremalityVerdict {
  Extremality status = Extremality::Inconclusive;
  /// Real coefficients a_i (one per element, zero for zero elements) with
  /// sum a_i M_i = 0. Present iff status is NotExtremal.
  std::optional<std::vector<double>> witness;
  /// Numerical rank of the nonzero elements' real vectorizations.
  int rank = 0;
};

/// Linear-independence test on the nonzero elements. Independent rank-1
/// POVMs are Extremal, independent higher-rank ones Inconclusive, and any
/// dependence gives NotExtremal with a witness.
ExtremalityVerdict extremality_check(const Povm &p);

/// Convex combination of POVMs, zero-padding shorter ones.
Povm mix(std::span<const double> weights, std::span<const Povm> povms);

/// Output element g is the sum of the input elements with mapping[i] == g.
/// `groups` defaults to max(mapping) + 1.
Povm coarse_grain(const Povm &p, std::span<const int> mapping, int groups = -1);

struct Refinement {
  Povm refined;
  std::vector<int> mapping;  // refined index -> original index
};

/// Splits each element into its nonzero scaled eigenprojectors. Degenerate
/// eigenspaces are resolved with `tie_breaker` when given.
Refinement refine_rank_one(const Povm &p, const std::optional<ComplexMatrix> &tie_breaker = std::nullopt);

/// Convex decomposition into POVMs whose rank-1 refinements are extremal.
struct Decomposition {
  std::vector<double> weights;
  std::vector<Povm> components;
  /// Rank-1 extremal leaves and the refinement map that groups them into
  /// `components`. Empty unless produced by extremal_decompose.
  std::vector<Povm> refined_components;
  std::vector<int> refinement_mapping;

  Povm mixture() const;
};

Decomposition extremal_decompose(const Povm &p, const std::optional<ComplexMatrix> &tie_breaker = std::nullopt);

/// Qubit SIC {1/2 |0><0|, 1/2 |phi_k><phi_k|}, |phi_k> = sqrt(1/3)|0> + w^k sqrt(2/3)|1>.
Povm sic_qubit();
/// Qutrit SIC from the fiducial (0, 1, -1)/sqrt(2) under Weyl-Heisenberg shifts.
Povm sic_qutrit();
/// 1/2 of the Z basis plus 1/2 of the X basis.
Povm mub_qubit();
/// {|+><+|, |-><-|}.
Povm vn_x_qubit();
/// Rank-1 projectors onto the standard basis of C^d.
Povm computational_basis(int d);
Povm trivial_povm(int d, std::span<const double> weights);
/// (1 - mu) p + mu trivial_povm(d, uniform).
Povm depolarize(const Povm &p, double mu);

/// m = d^2 rank-1 elements of trace 1/d with pairwise overlaps 1/(d+1).
bool is_sic(const Povm &p, double tol = 1e-8);

}  // namespace qintrinsic

#endif  // QINTRINSIC_POVM_H_
