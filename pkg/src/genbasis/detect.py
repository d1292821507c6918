"""Detect abrupt ground-state changes of parametrized Hamiltonians.

The location index orders the pseudo-probabilities of theta(lambda)
with respect to a generalized basis. Intervals of lambda on which it is
constant are comonotonicity intervals; their endpoints (crossing points)
flag possible drastic changes of the ground state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from ._config import DEFAULT_TOL
from .catalog import COUPLING
from .entropy import shannon_entropy, von_neumann_entropy
from .errors import DimensionError
from .linalg import check_hermitian, hermitian_eig, hermitian_matrix_function

__all__ = [
    "AffineHamiltonianFamily",
    "ComonotonicityPartition",
    "EntropyRow",
    "Interval",
    "LocationIndex",
    "NoisyEigensystem",
    "ThermalState",
    "comonotonicity_partition",
    "crossings_in_units_of_d",
    "equal_eigenvalue_discriminant",
    "entropy_scan",
    "expected_eigenvalue_approx",
    "location_index",
    "noisy_eigensystem",
    "noisy_qubit_family",
    "partition_from_coefficients",
    "probe_ties",
    "qubit_family",
    "s_affine_coefficients",
    "scan_partition",
    "thermal_quantities",
]


@dataclass(frozen=True)
class AffineHamiltonianFamily:
    """theta(lambda) = h0 + lambda * h1 on the range [a, b] (infinite ends allowed)."""

    h0: np.ndarray
    h1: np.ndarray
    lam_range: tuple = (-math.inf, math.inf)
    description: str = ""

    def __post_init__(self):
        h0 = check_hermitian(self.h0, name="H0")
        h1 = check_hermitian(self.h1, name="H1")
        if h0.shape != h1.shape:
            raise DimensionError(f"H0 {h0.shape} and H1 {h1.shape} differ in shape")
        object.__setattr__(self, "h0", h0)
        object.__setattr__(self, "h1", h1)
        a, b = self.lam_range
        if not a < b:
            raise ValueError(f"empty lambda range ({a}, {b})")

    @property
    def d(self) -> int:
        return self.h0.shape[0]

    def __call__(self, lam: float) -> np.ndarray:
        return self.h0 + lam * self.h1

    def with_noise(self, noise) -> "AffineHamiltonianFamily":
        """Family with diag(noise) added to the free part."""
        noise = np.asarray(noise, dtype=float).reshape(-1)
        if noise.shape[0] != self.d:
            raise DimensionError(f"need {self.d} noise values")
        return AffineHamiltonianFamily(self.h0 + np.diag(noise), self.h1, self.lam_range,
                                       f"{self.description} + diag noise".strip())


def qubit_family(lam_range=(-math.inf, math.inf)) -> AffineHamiltonianFamily:
    """theta(lambda) = 1 + lambda [[0, 1+i], [1-i, 0]]; level crossing at lambda = 0."""
    return AffineHamiltonianFamily(np.eye(2, dtype=complex), COUPLING, lam_range, "qubit")


def noisy_qubit_family(s=0.0, d=0.0, lam_range=(-math.inf, math.inf)) -> AffineHamiltonianFamily:
    """`qubit_family` with diag(s + d, s - d) added to the free part."""
    fam = qubit_family(lam_range).with_noise([s + d, s - d])
    return AffineHamiltonianFamily(fam.h0, fam.h1, lam_range, f"noisy qubit S={s} D={d}")


def s_affine_coefficients(family: AffineHamiltonianFamily, gb) -> tuple[np.ndarray, np.ndarray]:
    """Intercepts and slopes of s(i | lambda) = a_i + b_i lambda."""
    if family.d != gb.d:
        raise DimensionError(f"family has dimension {family.d}, basis has {gb.d}")
    c = gb.d / gb.n
    a = c * np.einsum("ab,iba->i", family.h0, gb.sigmas).real
    b = c * np.einsum("ab,iba->i", family.h1, gb.sigmas).real
    return a, b


@dataclass(frozen=True)
class LocationIndex:
    """States ordered by decreasing coefficient (0-based), plus a tie flag."""

    order: tuple
    tie: bool

    @property
    def labels(self) -> tuple:
        """1-based labels, as states are numbered in print."""
        return tuple(k + 1 for k in self.order)

    def __str__(self):
        return "(" + ",".join(map(str, self.labels)) + ")" + (" tie" if self.tie else "")


def location_index(s, tie_tol=DEFAULT_TOL.tie) -> LocationIndex:
    s = np.asarray(s, dtype=float).reshape(-1)
    order = np.argsort(-s, kind="stable")
    gaps = -np.diff(s[order])
    tie = bool(gaps.size and gaps.min() <= tie_tol)
    return LocationIndex(tuple(int(k) for k in order), tie)


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float
    index: LocationIndex

    def __contains__(self, lam):
        return self.lo < lam < self.hi


@dataclass(frozen=True)
class ComonotonicityPartition:
    crossings: tuple
    intervals: tuple
    lam_range: tuple

    @property
    def degenerate(self) -> bool:
        """True when some interval still ties at its probe point."""
        return any(iv.index.tie for iv in self.intervals)

    def index_at(self, lam: float) -> LocationIndex | None:
        """Index of the interval containing `lam`; None at a crossing point."""
        for iv in self.intervals:
            if lam in iv:
                return iv.index
        return None


def _dedup(points, tol):
    out = []
    for p in sorted(points):
        if out and abs(p - out[-1]) <= tol:
            continue
        out.append(p)
    return out


def _probe(lo, hi):
    if math.isinf(lo) and math.isinf(hi):
        return 0.0
    if math.isinf(lo):
        return hi - max(1.0, abs(hi))
    if math.isinf(hi):
        return lo + max(1.0, abs(lo))
    return 0.5 * (lo + hi)


def _assemble(crossings, s_of, lam_range, tie_tol) -> ComonotonicityPartition:
    a, b = lam_range
    edges = [a, *crossings, b]
    intervals = tuple(
        Interval(lo, hi, location_index(s_of(_probe(lo, hi)), tie_tol)) for lo, hi in zip(edges, edges[1:])
    )
    return ComonotonicityPartition(tuple(crossings), intervals, (a, b))


def partition_from_coefficients(a, b, lam_range=(-math.inf, math.inf), tie_tol=DEFAULT_TOL.tie,
                                dedup_tol=DEFAULT_TOL.crossing_dedup) -> ComonotonicityPartition:
    """Exact partition for affine coefficients s_i(lambda) = a_i + b_i lambda.

    Crossing points are the pairwise intersections (a_i - a_j)/(b_j - b_i)
    strictly inside the range.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    lo, hi = lam_range
    pts = []
    n = a.shape[0]
    for i in range(n):
        for j in range(i + 1, n):
            db = b[j] - b[i]
            if abs(db) <= tie_tol:
                continue
            x = (a[i] - a[j]) / db
            if lo < x < hi:
                pts.append(float(x))
    crossings = _dedup(pts, dedup_tol)
    return _assemble(crossings, lambda lam: a + b * lam, (lo, hi), tie_tol)


def comonotonicity_partition(family: AffineHamiltonianFamily, gb, lam_range=None,
                             tie_tol=DEFAULT_TOL.tie) -> ComonotonicityPartition:
    a, b = s_affine_coefficients(family, gb)
    return partition_from_coefficients(a, b, lam_range or family.lam_range, tie_tol)


def scan_partition(s_of: Callable[[float], np.ndarray], lam_range, points=2001, xtol=1e-10,
                   tie_tol=DEFAULT_TOL.tie, dedup_tol=1e-8) -> ComonotonicityPartition:
    """Partition for an arbitrary parametrization by grid scan and bisection.

    The location index is evaluated on a uniform grid; every change
    between neighbouring grid points is bisected down to `xtol`.
    Crossings closer together than the grid spacing may be missed.
    """
    lo, hi = lam_range
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise ValueError("grid scan needs a finite lambda range")
    grid = np.linspace(lo, hi, points)

    def order(x):
        return location_index(s_of(x), tie_tol).order

    found = []
    orders = [order(x) for x in grid]
    for x0, x1, o0, o1 in zip(grid, grid[1:], orders, orders[1:]):
        left, right = x0, x1
        while o0 != o1:
            a_, b_ = left, right
            while b_ - a_ > xtol:
                m = 0.5 * (a_ + b_)
                if order(m) == o0:
                    a_ = m
                else:
                    b_ = m
            x = 0.5 * (a_ + b_)
            found.append(x)
            # continue past this crossing in case several lie between grid points
            left = b_
            o0 = order(left)
    crossings = [x for x in _dedup(found, dedup_tol) if lo < x < hi]
    return _assemble(crossings, s_of, (lo, hi), tie_tol)


@dataclass(frozen=True)
class ThermalState:
    boltzmann: np.ndarray
    z: float
    s: np.ndarray
    mean_energy: float


def thermal_quantities(family: AffineHamiltonianFamily, gb, beta: float, lam: float) -> ThermalState:
    """exp(-beta theta), its trace Z, pseudo-coefficients and Tr[theta exp(-beta theta)] / Z."""
    if beta <= 0:
        raise ValueError("beta must be positive")
    theta = family(lam)
    shift = hermitian_eig(theta).values[0]
    # factor out the ground energy so large beta does not overflow
    e = hermitian_matrix_function(theta, lambda w: np.exp(-beta * (w - shift)))
    scale = math.exp(-beta * shift)
    boltz = e * scale
    z = float(np.trace(boltz).real)
    s = (gb.d / gb.n) * np.einsum("ab,iba->i", boltz, gb.sigmas).real
    mean = float(np.trace(theta @ e).real / np.trace(e).real)
    return ThermalState(boltz, z, s, mean)


@dataclass(frozen=True)
class NoisyEigensystem:
    """Eigen-data of the noisy qubit Hamiltonian; vectors are not normalized."""

    e_a: float
    e_b: float
    vec_a: np.ndarray
    vec_b: np.ndarray
    r: float
    degenerate: bool


def noisy_eigensystem(lam: float, s: float = 0.0, d: float = 0.0) -> NoisyEigensystem:
    """Closed-form levels and eigenvectors of diag(1+s+d, 1+s-d) + lam * COUPLING.

    ``r`` is the normalized overlap between the ground vectors at -|lam|
    and +|lam|. At lam = 0 the D-dominated limit is returned (r = 1), or
    a degenerate flag when D = 0 as well.
    """
    root = math.sqrt(d * d + 2 * lam * lam)
    e_a, e_b = 1 + s - root, 1 + s + root
    if lam == 0:
        if d == 0:
            nan = np.full(2, np.nan, dtype=complex)
            return NoisyEigensystem(e_a, e_b, nan, nan, math.nan, True)
        ground = np.array([0, 1], dtype=complex) if d > 0 else np.array([1, 0], dtype=complex)
        excited = ground[::-1].copy()
        return NoisyEigensystem(e_a, e_b, ground, excited, 1.0, False)
    ratio = d / abs(lam)
    amp = ratio + math.sqrt(2 + ratio * ratio)
    top = -math.copysign(1.0, lam) * (1 + 1j)
    vec_a = np.array([top, amp])
    vec_b = np.array([top, ratio - math.sqrt(2 + ratio * ratio)])
    r = (amp * amp - 2) / (amp * amp + 2)
    return NoisyEigensystem(e_a, e_b, vec_a, vec_b, r, False)


def expected_eigenvalue_approx(lam: float, sigma_noise: float) -> tuple[float, float]:
    """Second-order noise averages of the two levels for zero-mean S and D."""
    if lam == 0:
        raise ValueError("expansion is singular at lambda = 0")
    if sigma_noise < 0:
        raise ValueError("sigma_noise must be non-negative")
    x = abs(lam)
    shift = x * math.sqrt(2) + sigma_noise**2 / (2**1.5 * x)
    return 1 - shift, 1 + shift


def equal_eigenvalue_discriminant(h) -> float:
    """(h11 - h22)^2 + |h12|^2 for a 2x2 Hermitian matrix; zero iff the levels coincide."""
    h = check_hermitian(h)
    if h.shape != (2, 2):
        raise DimensionError("discriminant is defined for 2x2 matrices")
    return float((h[0, 0].real - h[1, 1].real) ** 2 + abs(h[0, 1]) ** 2)


def crossings_in_units_of_d(gb, h1=COUPLING) -> tuple:
    """Crossings of the noisy qubit family divided by D (D > 0).

    The common shift S moves every coefficient equally and drops out;
    the remaining intercept differences are proportional to D.
    """
    fam = AffineHamiltonianFamily(np.diag([1.0, -1.0]).astype(complex), h1)
    return comonotonicity_partition(fam, gb).crossings


@dataclass(frozen=True)
class EntropyRow:
    """Entropies of the unit-trace Hamiltonian at one coupling value.

    ``e_n[k]`` is the Shannon entropy against basis k. Noisy values and
    relative deviations (clean - noisy) / clean are present only when
    noise was supplied. ``valid`` is False when the normalized operator
    is not positive semidefinite; the entropies are then NaN.
    """

    lam: float
    valid: bool
    e_vn: float
    e_n: tuple
    ns: tuple
    e_vn_noise: float | None = None
    e_n_noise: tuple | None = None
    noise_valid: bool = True

    @property
    def e_vn_normalized(self) -> float:
        return self.e_vn / math.log(2)

    @property
    def e_n_normalized(self) -> tuple:
        return tuple(e / math.log(n) for e, n in zip(self.e_n, self.ns))

    @property
    def rel_vn(self) -> float | None:
        if self.e_vn_noise is None:
            return None
        return (self.e_vn - self.e_vn_noise) / self.e_vn

    @property
    def rel_n(self) -> tuple | None:
        if self.e_n_noise is None:
            return None
        return tuple((e - en) / e for e, en in zip(self.e_n, self.e_n_noise))


def _unit_trace_entropies(theta, bases, tol):
    tr = np.trace(theta).real
    if tr <= 0:
        return False, math.nan, tuple(math.nan for _ in bases)
    h = theta / tr
    if np.linalg.eigvalsh(h)[0] < -tol:
        return False, math.nan, tuple(math.nan for _ in bases)
    e_vn = von_neumann_entropy(h)
    e_n = tuple(
        shannon_entropy((gb.d / gb.n) * np.einsum("ab,iba->i", h, gb.sigmas).real) for gb in bases
    )
    return True, e_vn, e_n


def entropy_scan(family: AffineHamiltonianFamily, bases: Sequence, lambdas, noise=None,
                 tol=DEFAULT_TOL) -> list[EntropyRow]:
    """Von Neumann and generalized-basis entropies of theta(lambda) / Tr theta(lambda).

    `noise` (d reals) is added to the diagonal of the free part to form
    the noisy counterpart. Rows where an operator is indefinite are kept
    and marked invalid.
    """
    if hasattr(bases, "sigmas"):
        bases = [bases]
    bases = list(bases)
    for gb in bases:
        if gb.d != family.d:
            raise DimensionError("basis and family dimensions differ")
    noisy = family.with_noise(noise) if noise is not None else None
    ns = tuple(gb.n for gb in bases)
    rows = []
    for lam in lambdas:
        lam = float(lam)
        ok, e_vn, e_n = _unit_trace_entropies(family(lam), bases, tol.hermitian)
        if noisy is None:
            rows.append(EntropyRow(lam, ok, e_vn, e_n, ns))
            continue
        ok_n, e_vn_n, e_n_n = _unit_trace_entropies(noisy(lam), bases, tol.hermitian)
        rows.append(EntropyRow(lam, ok, e_vn, e_n, ns, e_vn_n, e_n_n, ok_n))
    return rows


def probe_ties(partition: ComonotonicityPartition) -> list:
    """Intervals whose probe point still ties (degenerate coefficients)."""
    return [iv for iv in partition.intervals if iv.index.tie]
