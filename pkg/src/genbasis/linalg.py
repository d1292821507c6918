"""Dense complex Hermitian linear algebra.

Span projectors, Hermitian eigendecomposition with reproducible phases,
Hermitian matrix functions and the discrete Fourier matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from ._config import DEFAULT_TOL
from .errors import DimensionError, ValidationError

__all__ = [
    "EigenSystem",
    "as_matrix",
    "check_hermitian",
    "check_unitary",
    "fourier_matrix",
    "hermitian_eig",
    "hermitian_matrix_function",
    "projector_onto_span",
]


def as_matrix(a, name="matrix") -> np.ndarray:
    """Return `a` as a square complex 2-D array, rejecting anything else."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"{name} must be square, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValidationError(f"{name} has non-finite entries")
    return m


def check_hermitian(h, tol=DEFAULT_TOL.hermitian, name="matrix") -> np.ndarray:
    """Validate Hermiticity and return the matrix as a complex array.

    The error message names the entry with the largest deviation from
    its conjugate partner.
    """
    m = as_matrix(h, name)
    dev = np.abs(m - m.conj().T)
    if dev.size and dev.max() > tol:
        i, j = np.unravel_index(np.argmax(dev), dev.shape)
        raise ValidationError(
            f"{name} is not Hermitian: |H[{i},{j}] - conj(H[{j},{i}])| = {dev[i, j]:.3e} > {tol:.1e}"
        )
    return m


def check_unitary(u, tol=DEFAULT_TOL.unitary, name="U") -> np.ndarray:
    m = as_matrix(u, name)
    err = np.abs(m @ m.conj().T - np.eye(m.shape[0])).max()
    if err > tol:
        raise ValidationError(f"{name} is not unitary: max |U U^+ - 1| = {err:.3e}")
    return m


def projector_onto_span(vectors, tol=DEFAULT_TOL.rank_rtol, dim=None) -> np.ndarray:
    """Orthogonal projector onto the span of `vectors`.

    Parameters
    ----------
    vectors : array_like, shape (k, d)
        One vector per row.
    tol : float
        Relative singular-value threshold for the numerical rank.
    dim : int, optional
        Ambient dimension; only needed when `vectors` is empty.

    Returns
    -------
    P : ndarray, shape (d, d)
        Hermitian idempotent with range equal to the span. The exact
        identity is returned when the span is the whole space.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if len(vectors) == 0:
        if dim is None:
            arr = np.asarray(vectors)
            if arr.ndim == 2:
                dim = arr.shape[1]
            else:
                raise DimensionError("dimension of an empty vector list is unknown; pass dim")
        return np.zeros((dim, dim), dtype=complex)
    try:
        cols = np.array([np.asarray(v, dtype=complex) for v in vectors]).T
    except ValueError as exc:
        raise DimensionError("vectors have different dimensions") from exc
    if cols.ndim != 2:
        raise DimensionError("vectors have different dimensions")
    d = cols.shape[0]
    if dim is not None and dim != d:
        raise DimensionError(f"vectors have dimension {d}, expected {dim}")
    u, s, _ = np.linalg.svd(cols, full_matrices=False)
    if s[0] == 0:
        return np.zeros((d, d), dtype=complex)
    rank = int(np.count_nonzero(s > tol * s[0]))
    if rank >= d:
        return np.eye(d, dtype=complex)
    q = u[:, :rank]
    p = q @ q.conj().T
    return 0.5 * (p + p.conj().T)


def fourier_matrix(d: int) -> np.ndarray:
    """Unitary DFT matrix with entries exp(2 pi i a b / d) / sqrt(d)."""
    if d < 1:
        raise ValueError("d must be a positive integer")
    k = np.arange(d)
    return np.exp(2j * np.pi * np.outer(k, k) / d) / np.sqrt(d)


@dataclass(frozen=True)
class EigenSystem:
    """Ascending eigenvalues and matching orthonormal eigenvectors (columns)."""

    values: np.ndarray
    vectors: np.ndarray

    def __iter__(self):
        return iter((self.values, self.vectors))

    def reconstruct(self) -> np.ndarray:
        return (self.vectors * self.values) @ self.vectors.conj().T


def _fix_phases(vecs: np.ndarray) -> np.ndarray:
    # make the largest-magnitude component of every column real positive
    idx = np.argmax(np.abs(vecs), axis=0)
    pivot = vecs[idx, np.arange(vecs.shape[1])]
    phase = pivot / np.abs(pivot)
    return vecs / phase


def hermitian_eig(h, tol=DEFAULT_TOL.hermitian) -> EigenSystem:
    """Full spectral decomposition of a Hermitian matrix.

    Eigenvalues come out ascending (ties keep LAPACK order). Each
    eigenvector is rotated so its largest-magnitude component is real
    and positive, making the output reproducible.
    """
    m = check_hermitian(h, tol)
    m = 0.5 * (m + m.conj().T)
    w, v = np.linalg.eigh(m)
    return EigenSystem(w, _fix_phases(v))


def hermitian_matrix_function(h, f: Callable, tol=DEFAULT_TOL.hermitian) -> np.ndarray:
    """Apply a real scalar function to a Hermitian matrix through its spectrum."""
    w, v = hermitian_eig(h, tol)
    with np.errstate(invalid="ignore", divide="ignore", over="ignore"):
        try:
            fw = np.asarray(f(w), dtype=float)
        except TypeError:
            fw = None
        if fw is None or fw.shape != w.shape:
            fw = np.array([float(f(x)) for x in w])
    if not np.all(np.isfinite(fw)):
        raise ValidationError("function is not finite on the spectrum")
    out = (v * fw) @ v.conj().T
    return 0.5 * (out + out.conj().T)
