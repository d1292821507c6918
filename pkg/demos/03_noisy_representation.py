"""
Noise-robust vector representation
==================================

A vector is split into n overlapping components. Multiplicative noise on
each component partly cancels, so the reconstruction error is usually
smaller than with an orthonormal basis.
"""

import numpy as np

from genbasis import example_i, example_ii, example_vector, expand, generalized_basis, noise_trial_suite

gb3 = generalized_basis(example_i())
gb4 = generalized_basis(example_ii())
v = example_vector()

# %%
# Components and their sum
e = expand(v, gb3)
print(np.round(e.components, 3))
print("sum - V:", np.abs(e.total() - v).max())

# %%
# Five noisy trials with uniform noise on [-0.5, 0.5]
suite = noise_trial_suite(v, [gb3, gb4], mu=0.5, trials=5, seed=0)
print("  ".join(f"{c:>8}" for c in suite.columns()))
for row in suite.rows():
    print("  ".join(f"{x:8.3f}" for x in row))

# %%
# The trend over many trials
summary = noise_trial_suite(v, [gb3, gb4], trials=2000, seed=1).summary()
for key in ("mean_eps3", "mean_eps4", "mean_eps_orth", "win_rate3", "win_rate4"):
    print(f"{key:>14}: {summary[key]:.3f}")
