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

#ifndef QINTRINSIC_ORACLE_H_
#define QINTRINSIC_ORACLE_H_

#include <cstddef>
#include <vector>

#include "qintrinsic/linalg.h"
#include "qintrinsic/povm.h"
#include "qintrinsic/rng.h"

namespace qintrinsic {

/// Lazily indexed grid of pure states, nested under doubling of the
/// resolution R.
///   d = 2: cos(t/2)|0> + e^{i f} sin(t/2)|1>, t = pi k / R (k = 0..R),
///          f = pi l / R (l < 2R).
///   d = 3: (cos a, sin a cos b e^{i f}, sin a sin b e^{i g}) with a, b on
///          (pi/2) k / R (k = 0..R) and f, g on pi l / R (l < 2R).
class PureStateGrid {
 public:
  /// Throws UnsupportedDimension unless d is 2 or 3.
  PureStateGrid(int d, int resolution);

  std::size_t size() const { return size_; }
  Ket at(std::size_t index) const;

 private:
  int d_;
  int resolution_;
  std::size_t size_;
};

std::vector<Ket> grid_pure_states(int d, int resolution);

struct PureMinimum {
  double value;
  Ket argmin;
};

/// Minimum Born-probability entropy over the grid.
PureMinimum brute_force_min_pure(const Povm &p, int resolution);

/// M_i = S^{-1/2} X_i X_i^dagger S^{-1/2} with Gaussian d x rank factors X_i.
/// rank <= 0 means full rank.
Povm random_povm(int d, int m, Rng &rng, int rank = 0);

/// Y Y^dagger / tr with Gaussian d x rank Y.
DensityState random_density(int d, int rank, Rng &rng);

Ket random_ket(int d, Rng &rng);

/// Haar unitary from the QR decomposition of a Gaussian matrix.
ComplexMatrix random_unitary(int d, Rng &rng);

/// Max-norm residual of sum_j r_j N^j - M plus the largest invariant
/// violation among the weights and components.
double verify_decomposition(const Decomposition &dec, const Povm &target);

}  // namespace qintrinsic

#endif  // QINTRINSIC_ORACLE_H_
