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

#ifndef QINTRINSIC_NAIMARK_H_
#define QINTRINSIC_NAIMARK_H_

#include <vector>

#include "qintrinsic/linalg.h"
#include "qintrinsic/povm.h"

namespace qintrinsic {

/// Orthogonal projectors summing to the identity.
class Pvm {
 public:
  /// Throws NotHermitian, InvalidState (idempotence, orthogonality) or
  /// IncompleteSum.
  explicit Pvm(std::vector<ComplexMatrix> projectors);

  int dim() const { return static_cast<int>(projectors_.front().rows()); }
  int size() const { return static_cast<int>(projectors_.size()); }
  const ComplexMatrix &operator[](int i) const { return projectors_[i]; }
  const std::vector<ComplexMatrix> &projectors() const { return projectors_; }

 private:
  std::vector<ComplexMatrix> projectors_;
};

/// PVM on system (x) ancilla with index a * ancilla_dim + q. The system
/// POVM is recovered with the ancilla prepared in |ancilla_index>.
struct NaimarkExtension {
  int system_dim = 0;
  int ancilla_dim = 0;
  ComplexMatrix unitary;
  Pvm pvm;
  int ancilla_index = 0;
};

/// P_i = U^dagger (1 (x) |i><i|) U where U maps |psi>|0> to
/// sum_i sqrt(M_i)|psi>|i>.
NaimarkExtension canonical_extension(const Povm &p);

/// Builds the projectors for an arbitrary dilating unitary.
NaimarkExtension extension_from_unitary(int system_dim, int ancilla_dim, const ComplexMatrix &unitary);

/// max_i || tr_Q[P_i (1 (x) |0><0|)] - M_i ||_max.
double consistency_check(const NaimarkExtension &ext, const Povm &p);

/// rho (x) |0><0| on the dilated space.
DensityState embed_state(const DensityState &rho, const NaimarkExtension &ext);

}  // namespace qintrinsic

#endif  // QINTRINSIC_NAIMARK_H_
