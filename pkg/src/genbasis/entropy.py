"""Pseudo-probabilities of Hermitian operators and their Shannon entropy."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._config import DEFAULT_TOL
from .errors import DimensionError, ValidationError
from .linalg import check_hermitian

__all__ = [
    "PseudoProbabilities",
    "entropy_of",
    "pseudo_probabilities",
    "redundancy_indices",
    "shannon_entropy",
    "von_neumann_entropy",
]


@dataclass(frozen=True)
class PseudoProbabilities:
    """Coefficients s(i) = (d/n) Tr[theta sigma(i)].

    `kind` is ``"density"`` when theta is a density matrix (then the
    values are non-negative and sum to one) and ``"hermitian"`` otherwise.
    """

    values: np.ndarray
    kind: str
    total: float

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.values, dtype=dtype)


def _is_density(theta: np.ndarray, tol: float) -> bool:
    if abs(np.trace(theta).real - 1) > tol:
        return False
    return bool(np.linalg.eigvalsh(theta)[0] >= -tol)


def pseudo_probabilities(theta, gb, tol=DEFAULT_TOL) -> PseudoProbabilities:
    theta = check_hermitian(theta, tol.hermitian, "theta")
    if theta.shape[0] != gb.d:
        raise DimensionError(f"theta has dimension {theta.shape[0]}, basis has {gb.d}")
    # Tr[theta sigma] = sum_ab theta_ab sigma_ba
    s = np.einsum("ab,iba->i", theta, gb.sigmas).real * (gb.d / gb.n)
    kind = "density" if _is_density(theta, tol.hermitian) else "hermitian"
    return PseudoProbabilities(s, kind, float(s.sum()))


def shannon_entropy(s, clamp=DEFAULT_TOL.entropy_clamp) -> float:
    """Entropy in nats of pseudo-probabilities, with 0 log 0 = 0."""
    if isinstance(s, PseudoProbabilities) and s.kind != "density":
        raise ValidationError("entropy is only defined for density-matrix subjects")
    p = np.asarray(s, dtype=float)
    if p.min() < -clamp:
        raise ValidationError(f"negative pseudo-probability {p.min():.3e}")
    p = np.where(p < clamp, 0.0, p)
    nz = p[p > 0]
    return float(-(nz * np.log(nz)).sum())


def entropy_of(rho, gb, tol=DEFAULT_TOL) -> float:
    """Shannon entropy of a density matrix with respect to `gb`."""
    return shannon_entropy(pseudo_probabilities(rho, gb, tol))


def von_neumann_entropy(rho, tol=DEFAULT_TOL) -> float:
    w = np.linalg.eigvalsh(check_hermitian(rho, tol.hermitian, "rho"))
    return shannon_entropy(w, tol.entropy_clamp)


def redundancy_indices(n: int, d: int) -> tuple[float, float]:
    """Return ((n - d) / d, log(n / d))."""
    if d < 1 or n < d:
        raise ValueError("need n >= d >= 1")
    return (n - d) / d, math.log(n / d)
