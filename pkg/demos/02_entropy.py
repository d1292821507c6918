"""
Entropy in a generalized basis
==============================

Pseudo-probabilities s(i) = (d/n) Tr[rho sigma(i)] define a Shannon
entropy that always lies in (log n - log d, log n].
"""

import math

import numpy as np

from genbasis import example_i, example_ii, generalized_basis, pseudo_probabilities, redundancy_indices
from genbasis.entropy import entropy_of

gb3 = generalized_basis(example_i())
gb4 = generalized_basis(example_ii())

# %%
# The position state |X;0><X;0|
rho = np.diag([1.0, 0.0])
s = pseudo_probabilities(rho, gb3)
print("s =", np.round(s.values, 4), "sum =", s.total)
print(f"E_3 = {entropy_of(rho, gb3):.4f}   E_4 = {entropy_of(rho, gb4):.4f}")

# %%
# The maximally mixed state reaches the upper bound log n.
print(f"E_4(1/2) = {entropy_of(np.eye(2) / 2, gb4):.6f}, log 4 = {math.log(4):.6f}")

# %%
# Random states stay strictly above log n - log d.
rng = np.random.default_rng(0)
lows = []
for _ in range(2000):
    v = rng.normal(size=2) + 1j * rng.normal(size=2)
    lows.append(entropy_of(np.outer(v, v.conj()) / np.vdot(v, v).real, gb4))
print(f"smallest E_4 seen: {min(lows):.4f} > {math.log(2):.4f}")

# %%
# Redundancy of the two bases.
for n in (3, 4):
    r, rr = redundancy_indices(n, 2)
    print(f"n={n}: R = {r:.3f}, log(n/d) = {rr:.3f}")
