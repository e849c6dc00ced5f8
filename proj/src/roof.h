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

// Internal helpers shared by the randomness optimizers.

#ifndef QINTRINSIC_SRC_ROOF_H_
#define QINTRINSIC_SRC_ROOF_H_

#include <cmath>
#include <numbers>
#include <vector>

#include "qintrinsic/randomness.h"

namespace qintrinsic::detail {

inline double phi(double t) { return t > 0.0 ? -t * std::log2(t) : 0.0; }

inline double dphi(double t) { return -std::log2(std::max(t, 1e-300)) - std::numbers::log2e; }

struct RoofResult {
  double value = 0.0;
  bool exact = false;
  /// Unnormalized ensemble vectors as columns; sum of outer products is rho.
  ComplexMatrix vectors;

  PureDecomposition ensemble() const;
};

/// Minimizes sum_k q_k H(<psi_k|E_i|psi_k>) over ensembles of rho. The
/// elements must sum to the identity on the support of rho. `warm` holds
/// optional starting vectors in the layout of RoofResult::vectors.
RoofResult born_convex_roof(const ComplexMatrix &rho, const std::vector<ComplexMatrix> &elements,
                            const OptimizerConfig &cfg, const ComplexMatrix *warm = nullptr);

}  // namespace qintrinsic::detail

#endif  // QINTRINSIC_SRC_ROOF_H_
