#!/usr/bin/env python3
# Copyright 2026 The SSQITE Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generate the qubit Hamiltonian files shipped under data/.

Requires PySCF. The C++ library only reads the resulting text files.

H2  : STO-3G, RHF orbitals, full CI in the (1 alpha, 1 beta) determinant
      space of the two spatial orbitals. Basis index = 2*alpha_orb + beta_orb,
      so the leftmost qubit carries the alpha occupation. 2 qubits.
LiH : STO-3G, RHF orbitals, CASCI(2e, 2o) around the HOMO/LUMO. The three
      singlet configurations (closed-shell, open-shell singlet, doubly
      excited) are one-hot encoded on 3 qubits:
        closed-shell -> |010>, open-shell -> |001>, doubly excited -> |100>.
      A number penalty mu*(N-1)^2 lifts all other Hamming-weight sectors.
"""
import argparse
import itertools

import numpy as np
from pyscf import ao2mo, fci, gto, mcscf, scf

PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def pauli_matrix(label):
    m = np.array([[1.0]], dtype=complex)
    for ch in label:  # leftmost factor acts on the highest bit
        m = np.kron(m, PAULI[ch])
    return m


def decompose(m, drop=1e-12):
    n = int(round(np.log2(m.shape[0])))
    terms = []
    for ops in itertools.product("IXYZ", repeat=n):
        label = "".join(ops)
        c = np.trace(m @ pauli_matrix(label)) / 2**n
        assert abs(c.imag) < 1e-12
        if abs(c.real) >= drop:
            terms.append((label, c.real))
    return terms


def det_matrix(h1, eri, norb, nelec):
    h2e = fci.direct_spin1.absorb_h1e(h1, eri, norb, nelec, 0.5)
    na = fci.cistring.num_strings(norb, nelec[0])
    nb = fci.cistring.num_strings(norb, nelec[1])
    dim = na * nb
    m = np.zeros((dim, dim))
    for k in range(dim):
        v = np.zeros(dim)
        v[k] = 1.0
        m[:, k] = fci.direct_spin1.contract_2e(h2e, v.reshape(na, nb), norb, nelec).ravel()
    return 0.5 * (m + m.T)


def h2_hamiltonian(r):
    mol = gto.M(atom=f"H 0 0 0; H 0 0 {r}", basis="sto-3g", verbose=0)
    mf = scf.RHF(mol).run()
    c = mf.mo_coeff
    h1 = c.T @ mf.get_hcore() @ c
    eri = ao2mo.restore(1, ao2mo.kernel(mol, c), 2)
    m = det_matrix(h1, eri, 2, (1, 1)) + mol.energy_nuc() * np.eye(4)
    return m


def lih_hamiltonian(r, mu):
    mol = gto.M(atom=f"Li 0 0 0; H 0 0 {r}", basis="sto-3g", verbose=0)
    mf = scf.RHF(mol).run()
    mc = mcscf.CASCI(mf, 2, 2)
    h1, ecore = mc.get_h1eff()
    eri = ao2mo.restore(1, mc.get_h2eff(), 2)
    d = det_matrix(h1, eri, 2, (1, 1)) + ecore * np.eye(4)
    # determinant order (alpha, beta): (0,0) (0,1) (1,0) (1,1)
    closed = np.array([1.0, 0, 0, 0])
    double = np.array([0, 0, 0, 1.0])
    open_shell = None
    for sign in (1.0, -1.0):
        v = np.array([0, 1.0, sign, 0]) / np.sqrt(2.0)
        s2, _ = fci.spin_op.spin_square0(v.reshape(2, 2), 2, (1, 1))
        if abs(s2) < 1e-10:
            open_shell = v
    assert open_shell is not None
    csf = np.stack([closed, open_shell, double], axis=1)
    block = csf.T @ d @ csf
    # bit assignment: closed -> bit 1, open -> bit 0, double -> bit 2
    bit_of = [1, 0, 2]
    e_ref = block[0, 0]
    h = e_ref * np.eye(8, dtype=complex)
    for p in range(3):
        for q in range(3):
            if p == q:
                continue
            # hopping between one-hot states
            for idx in range(8):
                if (idx >> bit_of[q]) & 1 and not (idx >> bit_of[p]) & 1:
                    jdx = idx ^ (1 << bit_of[q]) ^ (1 << bit_of[p])
                    h[jdx, idx] += block[p, q]
    for idx in range(8):
        weight = bin(idx).count("1")
        for p in range(3):
            if (idx >> bit_of[p]) & 1:
                h[idx, idx] += block[p, p] - e_ref
        h[idx, idx] += mu * (weight - 1) ** 2
    w = np.linalg.eigvalsh(h)
    assert np.allclose(w[:3], np.linalg.eigvalsh(block)), (w, np.linalg.eigvalsh(block))
    return h


def emit(path, name, header, points):
    with open(path, "w") as f:
        for line in header:
            f.write(f"# {line}\n")
        f.write(f"molecule {name}\n")
        for r, m in points:
            f.write(f"\ngeometry {r:g}\n")
            for label, c in decompose(m):
                f.write(f"{label} {c:.17g}\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="data")
    ap.add_argument("--mu", type=float, default=1.0)
    args = ap.parse_args()

    h2_r = [0.30, 0.45, 0.60, 0.735, 0.85, 0.95, 1.10, 1.30, 1.50, 1.75, 2.00, 2.50]
    emit(f"{args.out}/h2.ham", "H2",
         ["H2 / STO-3G full CI, 2 qubits (alpha occupation on the left qubit).",
          "Generated by tools/gen_hamiltonians.py with PySCF; coefficients in Hartree,",
          "bond lengths in Angstrom, nuclear repulsion included in the II term."],
         [(r, h2_hamiltonian(r)) for r in h2_r])

    lih_r = [1.00, 1.25, 1.50, 1.60, 1.75, 2.00, 2.25, 2.50, 3.00, 3.50]
    emit(f"{args.out}/lih.ham", "LiH",
         ["LiH / STO-3G CASCI(2e,2o) singlet block, one-hot on 3 qubits:",
          "closed-shell |010>, open-shell singlet |001>, doubly excited |100>.",
          f"Number penalty mu*(N-1)^2 with mu = {args.mu} Ha lifts the other sectors.",
          "Generated by tools/gen_hamiltonians.py with PySCF; coefficients in Hartree,",
          "bond lengths in Angstrom, core and nuclear energy included in the III term."],
         [(r, lih_hamiltonian(r, args.mu)) for r in lih_r])


if __name__ == "__main__":
    main()
