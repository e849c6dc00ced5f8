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

#include <cmath>

#include "gtest/gtest.h"
#include "qintrinsic/errors.h"
#include "qintrinsic/oracle.h"
#include "qintrinsic/rng.h"

using namespace qintrinsic;

namespace {

ComplexMatrix identity(int d) { return ComplexMatrix::Identity(d, d); }

ComplexMatrix weighted_sum(const std::vector<double> &a, const Povm &p) {
  ComplexMatrix s = ComplexMatrix::Zero(p.dim(), p.dim());
  for (int i = 0; i < p.size(); ++i) s += a[i] * p[i];
  return s;
}

}  // namespace

TEST(Povm, rejects_each_invariant) {
  ComplexMatrix half = 0.5 * identity(2);
  ComplexMatrix bad = half;
  bad(0, 1) = 0.1;
  EXPECT_THROW(Povm({bad, half}), NotHermitian);
  ComplexMatrix neg = identity(2);
  neg(1, 1) = -0.5;
  ComplexMatrix rest = identity(2) - neg;
  EXPECT_THROW(Povm({neg, rest}), NotPsd);
  EXPECT_THROW(Povm({half, 0.4 * identity(2)}), IncompleteSum);
  EXPECT_THROW(Povm({half, 0.5 * identity(3)}), DimensionMismatch);
}

TEST(Povm, diagnose_names_the_worst_element) {
  ComplexMatrix a = identity(2);
  a(1, 1) = -0.25;
  ComplexMatrix b = 0.5 * identity(2);
  std::vector<ComplexMatrix> els{b, a};
  PovmDiagnostics d = diagnose(els);
  EXPECT_EQ(d.min_eigenvalue_index, 1);
  EXPECT_NEAR(d.min_eigenvalue, -0.25, 1e-12);
  EXPECT_NEAR(d.completeness_residual, 0.75, 1e-12);
}

TEST(Povm, probabilities_sum_to_one) {
  Rng rng(1);
  Povm p = random_povm(3, 5, rng);
  Ket k = random_ket(3, rng);
  double total = 0.0;
  for (double x : p.probabilities(k.amplitudes())) total += x;
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Families, sic_and_mub_structure) {
  EXPECT_TRUE(is_sic(sic_qubit()));
  EXPECT_TRUE(is_sic(sic_qutrit()));
  EXPECT_FALSE(is_sic(mub_qubit()));
  EXPECT_FALSE(is_sic(computational_basis(2)));
  EXPECT_TRUE(is_rank_one(sic_qubit()));
  EXPECT_EQ(sic_qutrit().size(), 9);
  Povm d = depolarize(vn_x_qubit(), 1.0);
  EXPECT_LT(max_abs(d[0] - 0.5 * identity(2)), 1e-15);
}

TEST(Extremality, known_verdicts) {
  EXPECT_EQ(extremality_check(sic_qubit()).status, Extremality::Extremal);
  EXPECT_EQ(extremality_check(sic_qutrit()).status, Extremality::Extremal);
  EXPECT_EQ(extremality_check(vn_x_qubit()).status, Extremality::Extremal);
  EXPECT_EQ(extremality_check(computational_basis(3)).status, Extremality::Extremal);
  std::vector<double> half{0.5, 0.5};
  EXPECT_EQ(extremality_check(trivial_povm(2, half)).status, Extremality::NotExtremal);
  EXPECT_EQ(extremality_check(mub_qubit()).status, Extremality::NotExtremal);
  // Independent but not rank-1: the linear test cannot decide.
  EXPECT_EQ(extremality_check(depolarize(sic_qubit(), 0.3)).status, Extremality::Inconclusive);
}

TEST(Extremality, witness_annihilates_elements) {
  std::vector<double> w{0.25, 0.75};
  for (const Povm &p : {mub_qubit(), trivial_povm(2, w), depolarize(mub_qubit(), 0.4)}) {
    ExtremalityVerdict v = extremality_check(p);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_LT(max_abs(weighted_sum(*v.witness, p)), 1e-10);
    double norm = 0.0;
    for (double a : *v.witness) norm += a * a;
    EXPECT_NEAR(norm, 1.0, 1e-12);
  }
}

TEST(Extremality, zero_elements_are_ignored) {
  Povm p({Ket::basis(2, 0).projector(), ComplexMatrix::Zero(2, 2), Ket::basis(2, 1).projector()});
  EXPECT_EQ(extremality_check(p).status, Extremality::Extremal);
}

TEST(Mix, coarse_grain_and_refine) {
  Povm z = computational_basis(2);
  Povm x = vn_x_qubit();
  std::vector<double> w{0.5, 0.5};
  std::vector<Povm> ps{z, x};
  Povm m = mix(w, ps);
  EXPECT_LT(max_abs(m[0] - 0.5 * (z[0] + x[0])), 1e-15);
  std::vector<int> all{0, 0};
  Povm triv = coarse_grain(m, all);
  EXPECT_EQ(triv.size(), 1);
  EXPECT_LT(max_abs(triv[0] - identity(2)), 1e-14);

  Refinement r = refine_rank_one(m);
  EXPECT_TRUE(is_rank_one(r.refined));
  EXPECT_EQ(r.refined.size(), 4);
  Povm back = coarse_grain(r.refined, r.mapping, m.size());
  for (int i = 0; i < m.size(); ++i) EXPECT_LT(max_abs(back[i] - m[i]), 1e-12);
}

TEST(Decompose, extremal_input_is_single_component) {
  Decomposition dec = extremal_decompose(sic_qubit());
  ASSERT_EQ(dec.weights.size(), 1u);
  EXPECT_NEAR(dec.weights[0], 1.0, 1e-15);
  EXPECT_LT(verify_decomposition(dec, sic_qubit()), 1e-12);
}

TEST(Decompose, trivial_povm_splits_into_deterministic_parts) {
  std::vector<double> half{0.5, 0.5};
  Povm t = trivial_povm(2, half);
  Decomposition dec = extremal_decompose(t);
  ASSERT_EQ(dec.weights.size(), 2u);
  EXPECT_NEAR(dec.weights[0], 0.5, 1e-12);
  EXPECT_NEAR(dec.weights[1], 0.5, 1e-12);
  for (const auto &c : dec.components) {
    const bool first = max_abs(c[0] - identity(2)) < 1e-10 && max_abs(c[1]) < 1e-10;
    const bool second = max_abs(c[1] - identity(2)) < 1e-10 && max_abs(c[0]) < 1e-10;
    EXPECT_TRUE(first || second);
  }
  EXPECT_LT(verify_decomposition(dec, t), 1e-12);
}

TEST(Decompose, mub_round_trip) {
  Decomposition dec = extremal_decompose(mub_qubit());
  EXPECT_LT(verify_decomposition(dec, mub_qubit()), 1e-10);
  for (const auto &c : dec.components) EXPECT_NE(extremality_check(c).status, Extremality::NotExtremal);
}

TEST(Decompose, random_povms_round_trip) {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + trial % 2;
    Povm p = random_povm(d, 2 + trial % (d * d - 1), rng);
    Decomposition dec = extremal_decompose(p);
    EXPECT_LT(verify_decomposition(dec, p), 1e-8);
    for (const auto &leaf : dec.refined_components) {
      EXPECT_EQ(extremality_check(leaf).status, Extremality::Extremal);
    }
  }
}
