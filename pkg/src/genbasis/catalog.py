"""Built-in pre-bases, test vectors and Hamiltonian families for d = 2."""

from __future__ import annotations

import numpy as np

from .mobius import PreBasis

__all__ = [
    "COUPLING",
    "example_i",
    "example_ii",
    "example_vector",
    "prebasis",
]

_S2 = np.sqrt(2)
_S5 = np.sqrt(5)

_EXAMPLE_I = [
    [1, 0],
    [1 / _S5, 2j / _S5],
    [1 / _S2, 1 / _S2],
]
_EXAMPLE_II = _EXAMPLE_I + [[1 / _S5, 2 / _S5]]

# off-diagonal coupling of the qubit Hamiltonian 1 + lambda * COUPLING
COUPLING = np.array([[0, 1 + 1j], [1 - 1j, 0]])


def example_i() -> PreBasis:
    """Three states in d = 2: |0>, (|0> + 2i|1>)/sqrt5, (|0> + |1>)/sqrt2."""
    return PreBasis.from_vectors(_EXAMPLE_I, labels=("1", "2", "3"))


def example_ii() -> PreBasis:
    """`example_i` plus (|0> + 2|1>)/sqrt5."""
    return PreBasis.from_vectors(_EXAMPLE_II, labels=("1", "2", "3", "4"))


def prebasis(name: str) -> PreBasis:
    """Look up a built-in pre-basis by name ("I", "II", "example-I", ...)."""
    key = name.strip().upper().removeprefix("EXAMPLE").strip("-_ ")
    if key == "I":
        return example_i()
    if key == "II":
        return example_ii()
    raise KeyError(f"unknown built-in pre-basis {name!r}; choose I or II")


def example_vector() -> np.ndarray:
    """(1 + 2i, 3 - i) / sqrt(15)."""
    return np.array([1 + 2j, 3 - 1j]) / np.sqrt(15)
