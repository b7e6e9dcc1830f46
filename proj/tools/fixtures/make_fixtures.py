#!/usr/bin/env python3
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
"""Generates the committed H2 / LiH qubit Hamiltonian fixtures.

Requires pyscf. The C++ library never runs this; the .ham files under data/
are the checked-in output.

  H2:  STO-3G, RHF canonical orbitals, all 4 spin-orbitals, alternating
       alpha/beta ordering, Bravyi-Kitaev encoding.
  LiH: STO-3G, C2v, lowest A1 frozen doubly occupied, B1/B2 frozen empty,
       remaining 3 A1 orbitals active; "all alpha then all beta" ordering,
       parity encoding.

The encodings are linear maps b = M n (mod 2) on occupation vectors, so the
qubit Hamiltonian is the Jordan-Wigner-ordered Fock-space matrix with its
basis relabelled by M, expanded in Pauli words by trace projection.
"""
import argparse
import itertools
import os

import numpy as np
from pyscf import gto, mcscf, scf, symm

DROP_TOL = 1e-10


def annihilators(n):
    dim = 1 << n
    ops = []
    for p in range(n):
        a = np.zeros((dim, dim))
        for k in range(dim):
            if (k >> p) & 1:
                sign = (-1) ** bin(k & ((1 << p) - 1)).count("1")
                a[k ^ (1 << p), k] = sign
        ops.append(a)
    return ops


def fermion_hamiltonian(h1, eri, ecore, spin_orbital):
    """Dense H = sum h_pq a+_p a_q + 1/2 sum (pq|rs) a+_p a+_r a_s a_q + ecore.

    spin_orbital(p, s) maps spatial orbital p and spin s (0=alpha) to a mode.
    """
    norb = h1.shape[0]
    n = 2 * norb
    a = annihilators(n)
    ad = [m.T for m in a]
    ham = ecore * np.eye(1 << n)
    modes = [[spin_orbital(p, s) for p in range(norb)] for s in range(2)]
    for s in range(2):
        for p in range(norb):
            for q in range(norb):
                if abs(h1[p, q]) > 0:
                    ham += h1[p, q] * ad[modes[s][p]] @ a[modes[s][q]]
    for s, t in itertools.product(range(2), repeat=2):
        for p, q, r, u in itertools.product(range(norb), repeat=4):
            v = eri[p, q, r, u]
            if abs(v) < 1e-14:
                continue
            P, Q, R, U = modes[s][p], modes[s][q], modes[t][r], modes[t][u]
            if P == R or Q == U:
                continue
            ham += 0.5 * v * ad[P] @ ad[R] @ a[U] @ a[Q]
    return ham


def number_and_spin(norb, spin_orbital):
    n = 2 * norb
    a = annihilators(n)
    ad = [m.T for m in a]
    num = sum(ad[p] @ a[p] for p in range(n))
    sp = sum(ad[spin_orbital(p, 0)] @ a[spin_orbital(p, 1)] for p in range(norb))
    sm = sp.T
    sz = 0.5 * sum(
        ad[spin_orbital(p, 0)] @ a[spin_orbital(p, 0)]
        - ad[spin_orbital(p, 1)] @ a[spin_orbital(p, 1)]
        for p in range(norb)
    )
    s2 = sm @ sp + sz @ sz + sz
    return num, s2


def bk_matrix(n):
    assert n == 4
    return np.array(
        [[1, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [1, 1, 1, 1]], dtype=int
    )


def parity_matrix(n):
    return np.tril(np.ones((n, n), dtype=int))


def encode(mat, enc):
    n = enc.shape[0]
    dim = 1 << n
    perm = np.zeros(dim, dtype=int)
    for k in range(dim):
        occ = np.array([(k >> i) & 1 for i in range(n)])
        b = enc @ occ % 2
        perm[k] = sum(int(bit) << i for i, bit in enumerate(b))
    out = np.zeros_like(mat)
    out[np.ix_(perm, perm)] = mat
    return out


def pauli_terms(mat):
    n = int(np.log2(mat.shape[0]))
    dim = 1 << n
    idx = np.arange(dim)
    terms = []
    for x in range(dim):
        for z in range(dim):
            ny = bin(x & z).count("1")
            signs = np.array([(-1) ** bin(k & z).count("1") for k in idx])
            val = (1j ** ny) * np.sum(signs * mat[idx, idx ^ x]) / dim
            if abs(val) > DROP_TOL:
                assert abs(val.imag) < 1e-10, val
                terms.append((x, z, val.real))
    return terms


def word_text(x, z, n):
    parts = []
    for q in reversed(range(n)):
        xb, zb = (x >> q) & 1, (z >> q) & 1
        if xb or zb:
            parts.append(("X" if not zb else "Y" if xb else "Z") + str(q))
    return " ".join(parts) if parts else "I"


def write_ham(path, n, tag, header, ham, num, s2):
    with open(path, "w") as f:
        for line in header:
            f.write(f"# {line}\n")
        f.write(f"nqubits {n}\n")
        f.write(f"tag {tag}\n")
        for block, mat in (("", ham), ("number", num), ("spin2", s2)):
            if block:
                f.write(f"operator {block}\n")
            for x, z, c in pauli_terms(mat):
                f.write(f"term {c:.15g} {word_text(x, z, n)}\n")


def h2_point(r):
    mol = gto.M(atom=f"H 0 0 0; H 0 0 {r}", basis="sto-3g", symmetry="D2h",
                verbose=0)
    mf = scf.RHF(mol).run()
    c = mf.mo_coeff
    h1 = c.T @ mf.get_hcore() @ c
    from pyscf import ao2mo
    eri = ao2mo.restore(1, ao2mo.full(mol, c), c.shape[1])
    so = lambda p, s: 2 * p + s
    ham = fermion_hamiltonian(h1, eri, mol.energy_nuc(), so)
    num, s2 = number_and_spin(2, so)
    enc = bk_matrix(4)
    return encode(ham, enc), encode(num, enc), encode(s2, enc)


def lih_point(r, dm0=None):
    mol = gto.M(atom=f"Li 0 0 0; H 0 0 {r}", basis="sto-3g", symmetry="C2v",
                verbose=0)
    mf = scf.RHF(mol)
    mf.kernel(dm0)
    labels = symm.label_orb_symm(mol, mol.irrep_name, mol.symm_orb, mf.mo_coeff)
    a1 = [i for i, l in enumerate(labels) if l == "A1"]
    assert len(a1) == 4, labels
    active = a1[1:]
    mc = mcscf.CASCI(mf, 3, 2)
    mo = mc.sort_mo([i + 1 for i in active])
    h1, ecore = mc.get_h1eff(mo)
    from pyscf import ao2mo
    eri = ao2mo.restore(1, mc.get_h2eff(mo), 3)
    so = lambda p, s: p + 3 * s
    ham = fermion_hamiltonian(h1, eri, ecore, so)
    num, s2 = number_and_spin(3, so)
    enc = parity_matrix(6)
    e_cas = mc.kernel(mo)[0]
    return (encode(ham, enc), encode(num, enc), encode(s2, enc)), mf.make_rdm1(), e_cas


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "..", "data"))
    args = ap.parse_args()
    out = os.path.abspath(args.out)

    for r in np.round(np.arange(0.5, 2.5001, 0.1), 2):
        ham, num, s2 = h2_point(r)
        write_ham(os.path.join(out, "h2", f"h2_R{r:.2f}.ham"), 4, f"R={r:.2f}",
                  ["H2 STO-3G RHF orbitals, Bravyi-Kitaev encoding",
                   "spin-orbital order: alternating alpha,beta",
                   "energies in Hartree, R in Angstrom"], ham, num, s2)

    header = ["LiH STO-3G, C2v; active space: 3 A1 orbitals (core A1 frozen, B1/B2 empty)",
              "parity encoding; spin-orbital order: first all alpha then all beta",
              "energies in Hartree, R in Angstrom"]
    dm = None
    grid = [(os.path.join(out, "lih", "grid"), r) for r in np.round(np.linspace(0.5, 5.0, 21), 3)]
    grid += [(os.path.join(out, "lih"), 1.5), (os.path.join(out, "lih"), 3.2)]
    for d, r in grid:
        ops, dm, e_cas = lih_point(r, dm if d.endswith("grid") else None)
        name = f"lih_R{r:.3f}".rstrip("0").rstrip(".") if d.endswith("grid") else f"lih_R{r:.2f}"
        if d.endswith("grid"):
            name = f"lih_R{r:.3f}"
        write_ham(os.path.join(d, name + ".ham"), 6, f"R={r:g}", header + [f"CASCI(2,3) energy {e_cas:.12f}"], *ops)


if __name__ == "__main__":
    main()
