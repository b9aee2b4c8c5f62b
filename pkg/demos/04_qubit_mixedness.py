"""
Mixedness of a qubit
====================

Distances between density matrices induce measures of mixedness in the same
way: U(rho) = D(pure || I/d) - D(rho || I/d). On the family
rho = p |psi><psi| + (1 - p) I/2 the Bures measure sits above the l1 (trace
norm), Hilbert-Schmidt and von Neumann curves once all are scaled to 1 at
the maximally mixed state.
"""

import numpy as np

from induced_uncertainty import QDistanceSpec, induced_quantum_uncertainty, quantum_closed_form
from induced_uncertainty.quantum import random_density_matrix, rotate, random_unitary
from induced_uncertainty.sweep import quantum_sweep

res = quantum_sweep(0.1, normalize="all")
print(f"{'p':>4} " + " ".join(f"{c.label:>9}" for c in res.columns))
for k, p in enumerate(res.grid):
    print(f"{p:4.1f} " + " ".join(f"{c.values[k]:9.6f}" for c in res.columns))

# %%
# Spectral measures only see eigenvalues, so rotating the state changes nothing
rho = random_density_matrix(3, 3, seed=1)
w = random_unitary(3, seed=2)
for spec in (QDistanceSpec.bures(), QDistanceSpec.gen_renyi(2.0), QDistanceSpec.gen_tsallis(0.5)):
    a = induced_quantum_uncertainty(spec, rho)
    b = induced_quantum_uncertainty(spec, rotate(rho, w))
    print(f"{spec.label():<16} {a:.12f} {b:.12f} closed form {quantum_closed_form(spec, rho):.12f}")

# %%
# The entrywise l1 norm is not spectral: it depends on the basis
spec = QDistanceSpec.entrywise(1)
diag = np.diag([0.7, 0.3])
print("entrywise l1, diagonal:", induced_quantum_uncertainty(spec, diag))
print("entrywise l1, rotated :", induced_quantum_uncertainty(spec, rotate(diag, random_unitary(2, seed=4))))
