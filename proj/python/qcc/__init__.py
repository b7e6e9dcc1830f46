# Copyright 2026 The qcc Authors
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

"""Qubit coupled-cluster energies, entangler screening and factorization."""

from ._core import (
    EntanglerScore,
    Factorization,
    InputError,
    PauliSum,
    PauliWord,
    Problem,
    QccResult,
    QmfResult,
    RankReport,
    commutator,
    entangler_count,
    enumerate_entanglers,
    exact_ground,
    factorize,
    format_number,
    parse_problem,
    qcc_minimize,
    qmf,
    read_problem,
    reduce,
    screen,
    similarity_transform,
    stationary_qubits,
    sum_commutator,
)

__all__ = [
    "EntanglerScore",
    "Factorization",
    "InputError",
    "PauliSum",
    "PauliWord",
    "Problem",
    "QccResult",
    "QmfResult",
    "RankReport",
    "commutator",
    "entangler_count",
    "enumerate_entanglers",
    "exact_ground",
    "factorize",
    "format_number",
    "parse_problem",
    "qcc_minimize",
    "qmf",
    "read_problem",
    "reduce",
    "screen",
    "similarity_transform",
    "stationary_qubits",
    "sum_commutator",
]
