"""Numerical tolerances shared by every module."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    hermitian: float = 1e-10
    rank_rtol: float = 1e-10
    unitary: float = 1e-10
    independence: float = 1e-8
    resolution: float = 1e-9
    dual_construction: float = 1e-10
    unit_norm: float = 1e-10
    tie: float = 1e-9
    crossing_dedup: float = 1e-9
    entropy_clamp: float = 1e-12


DEFAULT_TOL = Tolerances()

# Hard caps on the subset lattice.
MAX_N = 20
MAX_CACHE_ENTRIES = 2**28
