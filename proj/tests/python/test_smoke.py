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

import math
import pathlib

import numpy as np
import pytest

import qcc

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


@pytest.fixture(scope="module")
def h2():
    return qcc.read_problem(DATA / "h2" / "h2_R1.00.ham")


def test_pauli_word_roundtrip_and_product():
    w = qcc.PauliWord("X1 Y0", 2)
    assert str(w) == "X1 Y0"
    assert w.length == 2
    assert (w * w).length == 0
    assert not qcc.PauliWord("X0", 1).commutes_with(qcc.PauliWord("Z0", 1))


def test_bad_word_raises():
    with pytest.raises(ValueError):
        qcc.PauliWord("Q0", 1)


def test_similarity_transform_matches_dense():
    h = qcc.PauliSum(2)
    h.add(qcc.PauliWord("Z0", 2), 0.7).add(qcc.PauliWord("X1 X0", 2), -0.3)
    p = qcc.PauliWord("Y1 X0", 2)
    tau = 0.37
    u = (math.cos(tau / 2) * np.eye(4) + 1j * math.sin(tau / 2) * p.to_matrix())
    expected = u @ h.to_matrix() @ u.conj().T
    got = qcc.similarity_transform(h, p, tau).to_matrix()
    assert np.abs(got - expected).max() < 1e-12


def test_entangler_counts():
    assert len(qcc.enumerate_entanglers(4)) == 243
    assert len(qcc.enumerate_entanglers(4, 2, 2)) == 54
    assert all(w.length >= 2 for w in qcc.enumerate_entanglers(3))


def test_h2_energies(h2):
    e_exact, spectrum = qcc.exact_ground(h2.hamiltonian)
    assert e_exact == pytest.approx(-1.10115033023262, abs=1e-9)
    assert spectrum[0] == pytest.approx(e_exact)
    ref = qcc.qmf(h2)
    assert ref.converged
    assert ref.energy == pytest.approx(-1.06610864931794, abs=1e-8)
    res = qcc.qcc_minimize(h2, ["X2 Y0"])
    assert res.energy == pytest.approx(e_exact, abs=1e-8)
    assert res.parameter_count == 2 * h2.n_qubits + 1


def test_h2_screen(h2):
    pool = [str(w) for w in qcc.enumerate_entanglers(4, 2, 2)]
    report = qcc.screen(h2, pool)
    assert len(report.scores) == 54
    lowering = [s for s in report.scores
                if s.delta_e is not None and s.delta_e < -1e-6]
    assert len(lowering) == 6
    assert report.csv().splitlines()[0].startswith("generator")


def test_factorize_identity():
    f = qcc.factorize(qcc.PauliWord("X3 Y2 Z1 X0", 4))
    assert f.variable_count == 1
    assert f.two_qubit_count == len(f.factors)
    p = qcc.PauliWord("X3 Y2 Z1 X0", 4).to_matrix()
    t = 0.41
    direct = math.cos(t) * np.eye(16) - 1j * math.sin(t) * p
    assert np.abs(f.matrix(t) - direct).max() < 1e-12


def test_reduce_lih():
    lih = qcc.read_problem(DATA / "lih" / "lih_R1.50.ham")
    assert sorted(qcc.stationary_qubits(lih.hamiltonian)) == [2, 5]
    reduced = qcc.reduce(lih, "2:-1,5:+1")
    assert reduced.n_qubits == 4
    assert len(reduced.hamiltonian) == 100
