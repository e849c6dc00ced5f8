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

#include "qintrinsic/naimark.h"

#include <algorithm>

#include "gtest/gtest.h"
#include "qintrinsic/errors.h"
#include "qintrinsic/oracle.h"
#include "qintrinsic/rng.h"

using namespace qintrinsic;

TEST(Pvm, rejects_non_projectors) {
  ComplexMatrix half = 0.5 * ComplexMatrix::Identity(2, 2);
  EXPECT_THROW(Pvm({half, half}), InvalidState);
  Pvm z({Ket::basis(2, 0).projector(), Ket::basis(2, 1).projector()});
  EXPECT_EQ(z.size(), 2);
}

TEST(Naimark, sic_dimensions_and_consistency) {
  NaimarkExtension ext = canonical_extension(sic_qubit());
  EXPECT_EQ(ext.system_dim, 2);
  EXPECT_EQ(ext.ancilla_dim, 4);
  EXPECT_EQ(ext.unitary.rows(), 8);
  EXPECT_LT(max_abs(ext.unitary.adjoint() * ext.unitary - ComplexMatrix::Identity(8, 8)), 1e-12);
  EXPECT_LT(consistency_check(ext, sic_qubit()), 1e-12);
}

TEST(Naimark, single_outcome_needs_no_ancilla) {
  std::vector<double> one{1.0};
  Povm t = trivial_povm(3, one);
  NaimarkExtension ext = canonical_extension(t);
  EXPECT_EQ(ext.ancilla_dim, 1);
  EXPECT_LT(consistency_check(ext, t), 1e-14);
}

TEST(Naimark, random_povms_are_consistent) {
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + trial % 2;
    const int rank = trial % 3 == 0 ? 1 : 0;
    Povm p = random_povm(d, std::max(rank == 1 ? d : 1, 1 + trial % (d * d)), rng, rank);
    EXPECT_LT(consistency_check(canonical_extension(p), p), 1e-10);
  }
}

TEST(Naimark, mismatched_povm_is_rejected) {
  NaimarkExtension ext = canonical_extension(sic_qubit());
  EXPECT_THROW(consistency_check(ext, computational_basis(2)), DimensionMismatch);
  EXPECT_GT(consistency_check(ext, mub_qubit()), 1e-3);
}

TEST(Naimark, from_unitary_matches_canonical) {
  NaimarkExtension ext = canonical_extension(mub_qubit());
  NaimarkExtension again = extension_from_unitary(2, 4, ext.unitary);
  for (int i = 0; i < 4; ++i) EXPECT_LT(max_abs(again.pvm[i] - ext.pvm[i]), 1e-13);
  EXPECT_THROW(extension_from_unitary(2, 4, 2.0 * ext.unitary), NotIsometry);
}

TEST(Naimark, embedded_state_reproduces_born_rule) {
  Rng rng(8);
  Povm p = random_povm(3, 4, rng);
  DensityState rho = random_density(3, 3, rng);
  NaimarkExtension ext = canonical_extension(p);
  DensityState big = embed_state(rho, ext);
  for (int i = 0; i < p.size(); ++i) {
    const double direct = (rho.matrix() * p[i]).trace().real();
    const double dilated = (big.matrix() * ext.pvm[i]).trace().real();
    EXPECT_NEAR(direct, dilated, 1e-12);
  }
}
