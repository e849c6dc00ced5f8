# Copyright 2026 The qintrinsic Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math
from pathlib import Path

import numpy as np
import pytest

import qintrinsic as qi

DATA = Path(__file__).resolve().parents[2] / "data"
KET0 = np.array([1.0, 0.0], dtype=complex)
RHO0 = np.outer(KET0, KET0.conj())


def test_sic_elements_sum_to_identity():
    sic = qi.sic_qubit()
    assert len(sic) == 4
    assert np.allclose(sum(sic.elements), np.eye(2), atol=1e-12)


def test_born_entropy_of_sic_on_zero():
    assert qi.born_entropy(KET0, qi.sic_qubit()) == pytest.approx(1.792481250360578, abs=1e-12)


def test_extremality_verdicts():
    assert qi.extremality_check(qi.sic_qubit()).status == qi.Extremality.Extremal
    assert qi.extremality_check(qi.mub_qubit()).status == qi.Extremality.NotExtremal


def test_decomposition_reconstructs_depolarized_sic():
    target = qi.depolarize(qi.sic_qubit(), 0.25)
    dec = qi.extremal_decompose(target)
    assert math.isclose(sum(dec.weights), 1.0, abs_tol=1e-12)
    assert qi.verify_decomposition(dec, target) < 1e-8


def test_canonical_extension_is_consistent():
    sic = qi.sic_qubit()
    ext = qi.canonical_extension(sic)
    u = ext.unitary
    assert np.allclose(u.conj().T @ u, np.eye(u.shape[0]), atol=1e-10)
    assert qi.consistency_check(ext, sic) < 1e-10


def test_mub_randomness_on_zero():
    report = qi.r_cf(RHO0, qi.mub_qubit(), "rc", restarts=4, seed=1)
    assert report.value == pytest.approx(0.5, abs=1e-6)


def test_projective_measurement_has_no_randomness_on_eigenstate():
    report = qi.r_cf(RHO0, qi.computational_basis(2), "rq", restarts=2)
    assert report.value == pytest.approx(0.0, abs=1e-9)
    assert report.bound_type == qi.BoundType.Exact


def test_load_povm_from_file():
    sic = qi.load_povm(str(DATA / "sic2.json"))
    assert qi.extremality_check(sic).status == qi.Extremality.Extremal


def test_incomplete_povm_raises():
    with pytest.raises(qi.Error):
        qi.Povm([np.diag([1.0, 0.0]).astype(complex), np.diag([0.0, 0.5]).astype(complex)])


def test_unknown_measure_raises():
    with pytest.raises(ValueError):
        qi.r_cf(RHO0, qi.sic_qubit(), "rx")
