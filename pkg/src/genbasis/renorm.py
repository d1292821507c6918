"""Renormalization of a pre-basis into a generalized basis.

Each state receives its own projector plus an equal share of every
Moebius operator of a subset it belongs to. Two independent routes to
the same operators are provided: the direct share allocation
(`tau_shapley`) and the marginal-projector form (`tau_varpi`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._config import DEFAULT_TOL
from .errors import ResidualError, ValidationError
from .linalg import check_unitary
from .mobius import PreBasis, ProjectorCache, build_projector_cache

__all__ = [
    "GeneralizedBasis",
    "conjugate_basis",
    "generalized_basis",
    "resolution_residual",
    "tau_shapley",
    "tau_varpi",
    "varpi",
]


def _popcounts(size: int) -> np.ndarray:
    masks = np.arange(size)
    counts = np.zeros(size, dtype=np.int64)
    while masks.any():
        counts += masks & 1
        masks = masks >> 1
    return counts


def _check_index(i: int, n: int):
    if not 0 <= i < n:
        raise IndexError(f"state index {i} out of range for n={n}")


def tau_shapley(i: int, cache: ProjectorCache) -> np.ndarray:
    """Share of the identity resolution owned by state `i`.

    Every Moebius operator of a subset containing `i` is split equally
    among the members of that subset.
    """
    n = cache.n
    _check_index(i, n)
    mob = cache.mobius()
    size = len(cache)
    masks = np.arange(size)
    sel = (masks >> i) & 1 == 1
    weights = 1.0 / _popcounts(size)[sel]
    return np.einsum("k,kab->ab", weights, mob[sel])


def varpi(i: int, a: int, cache: ProjectorCache) -> np.ndarray:
    """Projector Pi({i} | A) - Pi(A) for a subset `a` not containing `i`."""
    _check_index(i, cache.n)
    if a >> i & 1:
        raise ValueError(f"subset mask {a} already contains state {i}")
    return cache[a | 1 << i] - cache[a]


def tau_varpi(i: int, cache: ProjectorCache) -> np.ndarray:
    """Same operator as `tau_shapley`, written as a positive sum of projectors.

    The weight of the marginal projector for subset A is
    1 / (n * C(n-1, |A|)).
    """
    n = cache.n
    _check_index(i, n)
    size = len(cache)
    masks = np.arange(size)
    sel = (masks >> i) & 1 == 0
    a = masks[sel]
    binom = np.array([math.comb(n - 1, k) for k in range(n)], dtype=np.int64)
    weights = 1.0 / (n * binom[_popcounts(size)[sel]].astype(float))
    p = cache.array
    return np.einsum("k,kab->ab", weights, p[a | 1 << i] - p[a])


def resolution_residual(sigmas: np.ndarray) -> float:
    """Max-entry norm of (d/n) sum_i sigma(i) - 1."""
    n, d = sigmas.shape[0], sigmas.shape[1]
    return float(np.abs(sigmas.sum(axis=0) * d / n - np.eye(d)).max())


@dataclass(frozen=True)
class GeneralizedBasis:
    """n density matrices sigma(i) with (d/n) sum sigma(i) = 1."""

    sigmas: np.ndarray
    resolution_residual: float
    prebasis: PreBasis | None = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return self.sigmas.shape[0]

    @property
    def d(self) -> int:
        return self.sigmas.shape[1]

    def __getitem__(self, i):
        return self.sigmas[i]

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(self.sigmas)


def _as_prebasis(basis) -> PreBasis:
    return basis if isinstance(basis, PreBasis) else PreBasis.from_vectors(basis)


def generalized_basis(basis, cache: ProjectorCache | None = None, tol=DEFAULT_TOL) -> GeneralizedBasis:
    """Renormalize a pre-basis (or an (n, d) array of vectors).

    Both constructions of the per-state operators are evaluated and must
    agree; the projector-sum form is returned, scaled by n/d.

    Raises
    ------
    ResidualError
        If the two constructions disagree or the identity is not
        resolved, which signals a numerically degenerate pre-basis.
    """
    pb = _as_prebasis(basis)
    if cache is None:
        cache = build_projector_cache(pb, tol=tol)
    n, d = pb.n, pb.d
    taus = np.empty((n, d, d), dtype=complex)
    worst = 0.0
    for i in range(n):
        tv = tau_varpi(i, cache)
        ts = tau_shapley(i, cache)
        worst = max(worst, float(np.abs(tv - ts).max()))
        taus[i] = tv
    if worst > tol.dual_construction:
        raise ResidualError(f"the two constructions disagree by {worst:.3e}", worst)
    sigmas = taus * (n / d)
    sigmas = 0.5 * (sigmas + sigmas.conj().transpose(0, 2, 1))
    res = resolution_residual(sigmas)
    if res > tol.resolution:
        raise ResidualError(
            f"resolution of the identity fails: residual {res:.3e} > {tol.resolution:.1e}"
            f" (smallest d-subset singular value {pb.report.min_singular:.2e})",
            res,
        )
    sigmas.setflags(write=False)
    return GeneralizedBasis(sigmas, res, pb)


def conjugate_basis(gb: GeneralizedBasis, u, tol=DEFAULT_TOL) -> GeneralizedBasis:
    """Generalized basis {U sigma(i) U^+} for a unitary U."""
    u = check_unitary(u, tol.unitary)
    if u.shape[0] != gb.d:
        raise ValidationError(f"U has dimension {u.shape[0]}, basis has {gb.d}")
    sigmas = np.einsum("ab,ibc,dc->iad", u, gb.sigmas, u.conj())
    sigmas.setflags(write=False)
    pb = gb.prebasis.transformed(u) if gb.prebasis is not None else None
    return GeneralizedBasis(sigmas, resolution_residual(sigmas), pb)
