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

"""Intrinsic randomness of quantum measurements."""

from qintrinsic._core import (
    BoundType,
    Decomposition,
    Error,
    Extremality,
    ExtremalityVerdict,
    NaimarkExtension,
    Povm,
    RandomnessReport,
    born_entropy,
    canonical_extension,
    computational_basis,
    consistency_check,
    depolarize,
    extremal_decompose,
    extremality_check,
    load_povm,
    min_randomness,
    mub_qubit,
    r_cf,
    r_q_direct,
    sic_lower_bound,
    sic_qubit,
    sic_qutrit,
    verify_decomposition,
    vn_x_qubit,
)

__all__ = [
    "BoundType",
    "Decomposition",
    "Error",
    "Extremality",
    "ExtremalityVerdict",
    "NaimarkExtension",
    "Povm",
    "RandomnessReport",
    "born_entropy",
    "canonical_extension",
    "computational_basis",
    "consistency_check",
    "depolarize",
    "extremal_decompose",
    "extremality_check",
    "load_povm",
    "min_randomness",
    "mub_qubit",
    "r_cf",
    "r_q_direct",
    "sic_lower_bound",
    "sic_qubit",
    "sic_qutrit",
    "verify_decomposition",
    "vn_x_qubit",
]
