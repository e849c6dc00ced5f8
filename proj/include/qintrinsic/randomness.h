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

#ifndef QINTRINSIC_RANDOMNESS_H_
#define QINTRINSIC_RANDOMNESS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qintrinsic/linalg.h"
#include "qintrinsic/naimark.h"
#include "qintrinsic/povm.h"

namespace qintrinsic {

enum class Measure { Rc, Rq };
std::string to_string(Measure m);

enum class BoundType { Exact, UpperBound };
std::string to_string(BoundType b);

/// Ensemble sum_j q_j |psi_j><psi_j|.
struct PureDecomposition {
  std::vector<double> weights;
  std::vector<Ket> kets;

  ComplexMatrix density() const;
};

struct OptimizerConfig {
  int restarts = 32;
  int max_iterations = 2000;
  double convergence_tol = 1e-7;
  /// Number of ensemble or decomposition terms; 0 selects r^2 for state
  /// ensembles of a rank-r state and m d^2 for POVM decompositions.
  int decomposition_terms = 0;
  /// Initial augmented-Lagrangian penalty for the decomposition constraints.
  double penalty_weight = 1e3;
  std::uint64_t seed = 0;
};

struct RandomnessReport {
  double value = 0.0;
  BoundType bound_type = BoundType::Exact;
  std::optional<Decomposition> decomposition;
  std::optional<PureDecomposition> ensemble;
  std::vector<std::string> notes;
};

/// sum_i P_i rho P_i.
DensityState block_dephase(const DensityState &rho, const Pvm &pvm);

/// S(Delta(rho)) - S(rho).
double r_q_pvm(const DensityState &rho, const Pvm &pvm);

/// S(Delta(|psi><psi|)), the Shannon entropy of the block probabilities.
double r_c_pure_pvm(const Ket &psi, const Pvm &pvm);

/// Convex roof of r_c_pure_pvm over ensembles of rho (local search).
RandomnessReport r_c_pvm(const DensityState &rho, const Pvm &pvm, const OptimizerConfig &cfg = {});

/// Randomness of an extremal POVM through its canonical extension.
/// Throws NotExtremalInput for linearly dependent elements.
RandomnessReport r_extremal(const DensityState &rho, const Povm &p, Measure measure, const OptimizerConfig &cfg = {});

/// R(rho (x) |0><0|, P) for the canonical extension P of any POVM,
/// evaluated without building the dilation:
///   Rq = sum_i S(sqrt(N_i) rho sqrt(N_i)) - S(rho), unnormalized entropies;
///   Rc = convex roof of the Born-probability entropy.
double r_q_direct(const DensityState &rho, const Povm &p);
RandomnessReport r_c_direct(const DensityState &rho, const Povm &p, const OptimizerConfig &cfg = {});

/// Born-probability entropy H(<psi|M_i|psi>), the randomness of a pure
/// input under the canonical extension.
double born_entropy(const Ket &psi, const Povm &p);

/// Minimum over decompositions p = sum_j r_j N^j of sum_j r_j R(rho, N^j)
/// (local search seeded by explicit decompositions).
RandomnessReport r_cf(const DensityState &rho, const Povm &p, Measure measure, const OptimizerConfig &cfg = {});

/// Minimum of R(psi, p) over pure inputs. R is the Born entropy for
/// extremal p and r_cf otherwise.
RandomnessReport min_randomness(const Povm &p, Measure measure, const OptimizerConfig &cfg = {});

/// True iff psi is an eigenvector of every element (within 1e-8).
bool is_non_random_pure(const Ket &psi, const Povm &p);

/// True iff N^j_i rho N^j_k vanishes for all j and i != k.
bool check_nonrandom_condition(const DensityState &rho, const Decomposition &dec);

/// log2(d (d + 1) / (tr rho^2 + 1)).
double rastegin_bound(const DensityState &rho);
/// log2((d + 1) / 2).
double sic_lower_bound(int d);
/// log2(d).
double mixed_upper_bound(int d);

/// True iff every element commutes with rho (within 1e-8).
bool commutation_check(const DensityState &rho, const Povm &p);

}  // namespace qintrinsic

#endif  // QINTRINSIC_RANDOMNESS_H_
