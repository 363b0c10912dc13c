"""Regenerate the frozen hydrogen Hamiltonian fixtures (STO-3G, Jordan-Wigner).

Requires openfermion, openfermionpyscf and pyscf. The JSON outputs are committed;
this script is only needed to rebuild them.

Qubit 2p / 2p+1 hold the alpha / beta spin orbital of spatial orbital p.
"""
import json
import sys

from openfermion import MolecularData, get_fermion_operator, jordan_wigner
from openfermionpyscf import run_pyscf


def chain(n, d):
    return [("H", (0.0, 0.0, i * d)) for i in range(n)]


def qubit_terms(n_atoms, d):
    mol = MolecularData(chain(n_atoms, d), "sto-3g", 1, 0)
    mol = run_pyscf(mol, run_scf=True, run_fci=True)
    op = jordan_wigner(get_fermion_operator(mol.get_molecular_hamiltonian()))
    terms = {}
    for ops, c in op.terms.items():
        if abs(c.imag) > 1e-12:
            raise ValueError("non-Hermitian term")
        if abs(c.real) < 1e-14:
            continue
        letters = ["I"] * mol.n_qubits
        for q, p in ops:
            letters[q] = p
        key = "".join(letters)
        terms[key] = terms.get(key, 0.0) + c.real
    return mol, terms


def dump(path, terms, n_qubits):
    rows = [f'  ["{k}", {float(f"{v:.15g}")!r}]' for k, v in sorted(terms.items())]
    with open(path, "w") as f:
        f.write(f'{{"n_qubits": {n_qubits}, "terms": [\n')
        f.write(",\n".join(rows))
        f.write("\n]}\n")
    return len(rows)


def embed(terms, positions, n_qubits):
    out = {}
    for k, v in terms.items():
        letters = ["I"] * n_qubits
        for src, dst in enumerate(positions):
            letters[dst] = k[src]
        key = "".join(letters)
        out[key] = out.get(key, 0.0) + v
    return out


def main(outdir):
    for label, n, d in [("h2_sto3g_d0.74", 2, 0.74), ("h4_sto3g_d3.0", 4, 3.0)]:
        mol, terms = qubit_terms(n, d)
        count = dump(f"{outdir}/{label}.json", terms, mol.n_qubits)
        print(label, mol.n_qubits, count, "E_FCI", mol.fci_energy, "E_HF", mol.hf_energy)

    # Two independent H2 blocks. With 4 electrons in 8 spin orbitals the default pair
    # partition couples spatial orbitals (0,2) and (1,3), i.e. qubits {0,1,4,5} and
    # {2,3,6,7}; each block is a complete H2 problem on one of those quadruples.
    _, block_a = qubit_terms(2, 0.74)
    _, block_b = qubit_terms(2, 1.5)
    merged = embed(block_a, [0, 1, 4, 5], 8)
    for k, v in embed(block_b, [2, 3, 6, 7], 8).items():
        merged[k] = merged.get(k, 0.0) + v
    count = dump(f"{outdir}/separable_two_pair.json", merged, 8)
    print("separable_two_pair", 8, count)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else ".")
