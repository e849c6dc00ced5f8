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

#include "qintrinsic/linalg.h"

#include <cmath>
#include <limits>

#include "gtest/gtest.h"
#include "qintrinsic/errors.h"
#include "qintrinsic/oracle.h"
#include "qintrinsic/rng.h"

using namespace qintrinsic;

namespace {

ComplexMatrix diag2(double a, double b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST(Ket, validates_norm) {
  ComplexVector v(2);
  v << 1.0, 1.0;
  EXPECT_THROW(Ket{v}, InvalidState);
  Ket k = Ket::normalized(v);
  EXPECT_NEAR(k.amplitudes().norm(), 1.0, 1e-15);
  EXPECT_EQ(Ket::basis(3, 2).amplitudes()(2), Complex(1.0));
  EXPECT_THROW(Ket::normalized(ComplexVector::Zero(2)), InvalidState);
}

TEST(DensityState, validates_invariants) {
  EXPECT_THROW(DensityState(diag2(0.7, 0.7)), InvalidState);
  EXPECT_THROW(DensityState(diag2(1.2, -0.2)), InvalidState);
  ComplexMatrix nh = diag2(0.5, 0.5);
  nh(0, 1) = 0.3;
  EXPECT_THROW(DensityState{nh}, NonHermitian);
  DensityState mm = DensityState::maximally_mixed(4);
  EXPECT_NEAR(mm.purity(), 0.25, 1e-15);
  EXPECT_NEAR(DensityState::from_ket(Ket::basis(2, 1)).purity(), 1.0, 1e-15);
}

TEST(Eigen, sorted_descending_and_reconstructs) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    DensityState rho = random_density(3, 3, rng);
    Eigensystem es = hermitian_eig(rho.matrix());
    for (size_t k = 1; k < es.values.size(); ++k) EXPECT_GE(es.values[k - 1], es.values[k]);
    ComplexMatrix back = es.vectors * RealVector(Eigen::Map<const RealVector>(es.values.data(), 3)).asDiagonal() *
                         es.vectors.adjoint();
    EXPECT_LT(max_abs(back - rho.matrix()), 1e-12);
  }
  ComplexMatrix nh = diag2(1.0, 0.0);
  nh(1, 0) = 0.5;
  EXPECT_THROW(hermitian_eig(nh), NonHermitian);
}

TEST(Eigen, resolved_basis_diagonalizes_tie_breaker) {
  ComplexMatrix h = ComplexMatrix::Identity(2, 2);
  ComplexMatrix t(2, 2);
  t << 0.5, 0.5, 0.5, 0.5;
  Eigensystem es = hermitian_eig_resolved(h, t);
  ComplexMatrix c = es.vectors.adjoint() * t * es.vectors;
  EXPECT_LT(std::abs(c(0, 1)), 1e-12);
}

TEST(Entropy, shannon_values) {
  std::vector<double> half{0.5, 0.5};
  EXPECT_NEAR(shannon_entropy(half), 1.0, 1e-15);
  std::vector<double> p{0.5, 1.0 / 6, 1.0 / 6, 1.0 / 6};
  EXPECT_NEAR(shannon_entropy(p), 1.79248125036, 1e-10);
  std::vector<double> bad{0.5, 0.4};
  EXPECT_THROW(shannon_entropy(bad), InvalidDistribution);
  std::vector<double> neg{1.1, -0.1};
  EXPECT_THROW(shannon_entropy(neg), InvalidDistribution);
  std::vector<double> dust{1.0 + 1e-13, -1e-13};
  EXPECT_NEAR(shannon_entropy(dust), 0.0, 1e-12);
}

TEST(Entropy, von_neumann_and_relative) {
  DensityState rho(diag2(0.75, 0.25));
  EXPECT_NEAR(von_neumann_entropy(rho), 0.811278124459, 1e-11);
  EXPECT_NEAR(von_neumann_entropy(DensityState::maximally_mixed(3)), std::log2(3.0), 1e-12);
  DensityState mm = DensityState::maximally_mixed(2);
  EXPECT_NEAR(relative_entropy(rho, mm), 1.0 - 0.811278124459, 1e-11);
  EXPECT_NEAR(relative_entropy(rho, rho), 0.0, 1e-12);
  DensityState pure = DensityState::from_ket(Ket::basis(2, 0));
  EXPECT_EQ(relative_entropy(rho, pure), std::numeric_limits<double>::infinity());
}

TEST(Entropy, relative_entropy_nonnegative) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    DensityState a = random_density(3, 3, rng);
    DensityState b = random_density(3, 3, rng);
    EXPECT_GE(relative_entropy(a, b), -1e-12);
  }
}

TEST(MatrixSqrt, squares_back_and_rejects_negative) {
  Rng rng(5);
  DensityState rho = random_density(3, 2, rng);
  ComplexMatrix s = matrix_sqrt_psd(rho.matrix());
  EXPECT_LT(max_abs(s * s - rho.matrix()), 1e-12);
  EXPECT_THROW(matrix_sqrt_psd(diag2(1.0, -0.1)), NotPsd);
}

TEST(PartialTrace, product_states) {
  Rng rng(9);
  DensityState a = random_density(2, 2, rng);
  DensityState b = random_density(3, 3, rng);
  ComplexMatrix ab = kron(a.matrix(), b.matrix());
  EXPECT_LT(max_abs(partial_trace(ab, 2, 3, Subsystem::A) - a.matrix()), 1e-13);
  EXPECT_LT(max_abs(partial_trace(ab, 2, 3, Subsystem::B) - b.matrix()), 1e-13);
}

TEST(Isometry, completion_is_unitary) {
  Rng rng(13);
  ComplexMatrix u = random_unitary(6, rng);
  ComplexMatrix v = u.leftCols(2);
  ComplexMatrix w = complete_isometry_to_unitary(v);
  EXPECT_LT(max_abs(w.adjoint() * w - ComplexMatrix::Identity(6, 6)), 1e-12);
  EXPECT_LT(max_abs(w.leftCols(2) - v), 1e-12);
}

TEST(RealCoordinates, round_trip_and_isometry) {
  Rng rng(17);
  DensityState rho = random_density(3, 3, rng);
  RealVector x = hermitian_to_real(rho.matrix());
  EXPECT_EQ(x.size(), 9);
  EXPECT_LT(max_abs(real_to_hermitian(x, 3) - rho.matrix()), 1e-15);
  RealVector y = hermitian_to_real(rho.matrix(), true);
  EXPECT_NEAR(y.norm(), rho.matrix().norm(), 1e-14);
  EXPECT_LT(max_abs(real_to_hermitian(y, 3, true) - rho.matrix()), 1e-15);
}
