"""
Building a generalized basis
============================

Three non-orthogonal states in C^2 are renormalized into three density
matrices that resolve the identity.
"""

import numpy as np

from genbasis import conjugate_basis, example_i, fourier_matrix, generalized_basis
from genbasis.mobius import build_projector_cache, mobius_operator, subset_mask

np.set_printoptions(precision=3, suppress=True)

# %%
# The pre-basis: |X;0>, (|X;0> + 2i|X;1>)/sqrt5, (|X;0> + |X;1>)/sqrt2
pb = example_i()
print(pb.vectors)
print("every pair independent:", pb.report.independent)

# %%
# Span projectors are cached for all 2^n subsets. Their Moebius operators
# measure the overlap between states.
cache = build_projector_cache(pb)
print("D(1,2) =\n", mobius_operator(subset_mask([0, 1]), cache))
print("D(1,2,3) =\n", mobius_operator(subset_mask([0, 1, 2]), cache))

# %%
# Each Moebius operator is shared equally among its members.
gb = generalized_basis(pb)
for i, s in enumerate(gb, 1):
    print(f"sigma({i}) =\n{s}")
print("(d/n) sum sigma =\n", sum(gb) * gb.d / gb.n)
print("residual:", gb.resolution_residual)

# %%
# Unitary covariance: rotating the states rotates the basis.
f = fourier_matrix(2)
rotated = conjugate_basis(gb, f)
rebuilt = generalized_basis(pb.transformed(f))
print("F sigma(1) F^+ =\n", rotated[0])
print("max difference to rebuilding:", np.abs(rotated.sigmas - rebuilt.sigmas).max())
