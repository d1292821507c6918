"""Subset lattice of a pre-basis: span projectors and Moebius operators.

Subsets of the index set {0, ..., n-1} are encoded as integer bitmasks
(bit k set <=> vector k belongs to the subset).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from ._config import DEFAULT_TOL, MAX_CACHE_ENTRIES, MAX_N
from .errors import DimensionError, ValidationError
from .linalg import projector_onto_span

__all__ = [
    "PreBasis",
    "ProjectorCache",
    "ValidationReport",
    "build_projector_cache",
    "inverse_mobius",
    "mobius_operator",
    "mobius_trace_closed_form",
    "mobius_transform",
    "popcount",
    "subset_mask",
    "submasks",
    "zeta_transform",
]

_EXHAUSTIVE_LIMIT = 10**5
_SAMPLE_SIZE = 10**4


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def subset_mask(indices) -> int:
    """Bitmask of a collection of 0-based indices."""
    mask = 0
    for k in indices:
        if k < 0:
            raise ValueError(f"negative index {k}")
        mask |= 1 << k
    return mask


def submasks(mask: int):
    """Yield every submask of `mask`, from `mask` itself down to 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the d-subset independence check.

    `min_singular` is the smallest singular value over the examined
    d-subsets; `sampled` is True when only a random sample was examined.
    """

    independent: bool
    min_singular: float
    checked: int
    sampled: bool
    orthonormal_degenerate: bool = False


def _validate(vectors: np.ndarray, tol: float, seed: int = 0) -> ValidationReport:
    n, d = vectors.shape
    total = math.comb(n, d)
    if total <= _EXHAUSTIVE_LIMIT:
        subsets = combinations(range(n), d)
        sampled = False
        checked = total
    else:
        rng = np.random.default_rng(seed)
        subsets = (np.sort(rng.choice(n, size=d, replace=False)) for _ in range(_SAMPLE_SIZE))
        sampled = True
        checked = _SAMPLE_SIZE
    smin = np.inf
    for idx in subsets:
        s = np.linalg.svd(vectors[list(idx)], compute_uv=False)
        smin = min(smin, s[-1])
    return ValidationReport(
        independent=bool(smin > tol),
        min_singular=float(smin),
        checked=checked,
        sampled=sampled,
        orthonormal_degenerate=(n == d),
    )


@dataclass(frozen=True)
class PreBasis:
    """n unit vectors in a d-dimensional space, stored one per row."""

    vectors: np.ndarray
    report: ValidationReport = field(repr=False)
    labels: tuple = ()

    @property
    def n(self) -> int:
        return self.vectors.shape[0]

    @property
    def d(self) -> int:
        return self.vectors.shape[1]

    @classmethod
    def from_vectors(cls, vectors, normalize=True, strict=False, labels=(), tol=DEFAULT_TOL):
        """Build and validate a pre-basis.

        With ``normalize=False`` vectors that are not unit norm are
        rejected; with ``strict=True`` a failed independence check raises
        instead of being recorded in the report.
        """
        v = np.array(vectors, dtype=complex)
        if v.ndim != 2:
            raise DimensionError(f"expected an (n, d) array of vectors, got shape {v.shape}")
        n, d = v.shape
        if d < 1 or n < d:
            raise ValidationError(f"need n >= d >= 1, got n={n}, d={d}")
        if not np.all(np.isfinite(v)):
            raise ValidationError("vectors have non-finite entries")
        norms = np.linalg.norm(v, axis=1)
        if np.any(norms == 0):
            raise ValidationError(f"vector {int(np.argmin(norms))} is zero")
        if normalize:
            v = v / norms[:, None]
        elif np.abs(norms - 1).max() > tol.unit_norm:
            raise ValidationError(f"vectors must have unit norm (max deviation {np.abs(norms - 1).max():.2e})")
        report = _validate(v, tol.independence)
        if strict and not report.independent:
            raise ValidationError(
                f"some d-subset is linearly dependent (smallest singular value {report.min_singular:.2e})"
            )
        v.setflags(write=False)
        return cls(v, report, tuple(labels))

    def transformed(self, u) -> "PreBasis":
        """The pre-basis {U|i>}."""
        return PreBasis.from_vectors(self.vectors @ np.asarray(u).T, labels=self.labels)


class ProjectorCache:
    """Span projectors of every subset of a pre-basis, indexed by bitmask.

    Entry 0 is the zero matrix; entries with at least d members are the
    identity when the pre-basis passed validation.
    """

    def __init__(self, projectors: np.ndarray, basis: PreBasis | None = None):
        projectors.setflags(write=False)
        self._p = projectors
        self.basis = basis
        self._mobius = None

    @property
    def n(self) -> int:
        return int(self._p.shape[0]).bit_length() - 1

    @property
    def d(self) -> int:
        return self._p.shape[1]

    def __len__(self):
        return self._p.shape[0]

    def __getitem__(self, mask: int) -> np.ndarray:
        if not 0 <= mask < len(self):
            raise IndexError(f"mask {mask} has bits outside the {self.n} low bits")
        return self._p[mask]

    @property
    def array(self) -> np.ndarray:
        """Read-only array of shape (2**n, d, d)."""
        return self._p

    def mobius(self) -> np.ndarray:
        """Moebius operators of every subset, computed once and kept."""
        if self._mobius is None:
            m = mobius_transform(self._p)
            m.setflags(write=False)
            self._mobius = m
        return self._mobius


def build_projector_cache(basis: PreBasis, strict=False, tol=DEFAULT_TOL) -> ProjectorCache:
    n, d = basis.n, basis.d
    if n > MAX_N:
        raise ValidationError(f"n = {n} exceeds the cap of {MAX_N}")
    if (1 << n) * d * d > MAX_CACHE_ENTRIES:
        raise ValidationError(f"2^{n} * {d}^2 complex entries exceed the cache limit")
    if strict and not basis.report.independent:
        raise ValidationError("pre-basis failed the d-subset independence check")
    full_rank_shortcut = basis.report.independent and not basis.report.sampled
    out = np.empty((1 << n, d, d), dtype=complex)
    eye = np.eye(d, dtype=complex)
    vecs = basis.vectors
    for mask in range(1 << n):
        if full_rank_shortcut and popcount(mask) >= d:
            out[mask] = eye
            continue
        rows = [k for k in range(n) if mask >> k & 1]
        out[mask] = projector_onto_span(vecs[rows], tol.rank_rtol, dim=d)
    return ProjectorCache(out, basis)


def mobius_operator(b: int, cache: ProjectorCache) -> np.ndarray:
    """Alternating sum of Pi(A) over every A contained in the non-empty subset `b`."""
    if b == 0:
        raise ValueError("the Moebius operator of the empty set is not defined")
    nb = popcount(b)
    out = np.zeros((cache.d, cache.d), dtype=complex)
    for a in submasks(b):
        if (nb - popcount(a)) % 2:
            out -= cache[a]
        else:
            out += cache[a]
    return out


def _butterfly(values: np.ndarray, sign: int) -> np.ndarray:
    f = np.array(values, dtype=complex)
    size = f.shape[0]
    tail = f.shape[1:]
    bit = 1
    while bit < size:
        view = f.reshape((size // (2 * bit), 2, bit) + tail)
        view[:, 1] += sign * view[:, 0]
        bit <<= 1
    return f


def mobius_transform(values: np.ndarray) -> np.ndarray:
    """Lattice-wide Moebius transform of an array indexed by bitmask, O(n 2^n)."""
    return _butterfly(values, -1)


def zeta_transform(values: np.ndarray) -> np.ndarray:
    """Inverse of `mobius_transform`: subset sums over the lattice."""
    return _butterfly(values, +1)


def inverse_mobius(a: int, mobius_values) -> np.ndarray:
    """Sum of the Moebius operators of all subsets of `a`.

    `mobius_values` is either a mapping from bitmask to matrix or an
    array indexed by bitmask. The empty set contributes nothing and may
    be absent.
    """
    total = None
    for b in submasks(a):
        if b == 0:
            continue
        try:
            term = mobius_values[b]
        except (KeyError, IndexError) as exc:
            raise KeyError(f"missing Moebius operator for subset mask {b}") from exc
        total = np.array(term, dtype=complex) if total is None else total + term
    if total is None:
        raise ValueError("inverse transform of the empty set needs the dimension; it is the zero matrix")
    return total


def mobius_trace_closed_form(card: int, d: int) -> int:
    """Trace of the Moebius operator of a subset with `card` elements."""
    if card < 1 or d < 1:
        raise ValueError("card and d must be positive")
    if card == 1:
        return 1
    if card <= d:
        return 0
    sign = -1 if (card - d) % 2 else 1
    return sign * math.comb(card - 2, d - 1)
