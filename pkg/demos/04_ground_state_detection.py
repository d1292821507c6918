"""
Detecting a ground-state change
===============================

For theta(lambda) = 1 + lambda C the ground state jumps at lambda = 0.
The ordering of the pseudo-probabilities (the location index) changes
there too, and noise splits the single crossing into several.
"""

import numpy as np

from genbasis import (
    comonotonicity_partition,
    example_i,
    example_ii,
    generalized_basis,
    noisy_eigensystem,
    noisy_qubit_family,
    qubit_family,
    thermal_quantities,
)
from genbasis.detect import entropy_scan

gb3 = generalized_basis(example_i())
gb4 = generalized_basis(example_ii())


def show(partition):
    for iv in partition.intervals:
        lo, hi = round(iv.lo, 9) + 0.0, round(iv.hi, 9) + 0.0  # no "-0.000"
        print(f"  ({lo:6.3f}, {hi:6.3f})  {iv.index}")


# %%
# Noiseless family: one crossing at 0
show(comonotonicity_partition(qubit_family(), gb3))

# %%
# Diagonal noise D = 1: six crossings for the 4-state basis
show(comonotonicity_partition(noisy_qubit_family(0, 1), gb4))

# %%
# Overlap of the ground states on either side of the crossing.
# Without noise they are orthogonal; noise makes them nearly parallel.
for d in (0.0, 0.1, 1.0):
    print(f"D={d}: r = {noisy_eigensystem(0.2, 0, d).r:.3f}")

# %%
# Thermal state at beta = 2
for lam in (-0.5, 0.0, 0.5):
    t = thermal_quantities(qubit_family(), gb3, 2.0, lam)
    print(f"lambda={lam:+.1f}  Z={t.z:.4f}  <e>={t.mean_energy:.4f}  s_E={np.round(t.s, 4)}")

# %%
# Entropies of the unit-trace Hamiltonian, with one noise draw
noise = np.random.default_rng([0, 0]).uniform(-0.5, 0.5, 2)
for r in entropy_scan(qubit_family(), [gb3, gb4], np.linspace(-0.4, 0.4, 5), noise=noise):
    print(f"lambda={r.lam:+.1f}  E_vN/log2={r.e_vn_normalized:.3f}  "
          f"E_3/log3={r.e_n_normalized[0]:.3f}  E_4/log4={r.e_n_normalized[1]:.3f}  "
          f"rel.dev vN={r.rel_vn:.3f} E3={r.rel_n[0]:.3f} E4={r.rel_n[1]:.3f}")
