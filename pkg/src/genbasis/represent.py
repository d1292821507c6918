"""Vector expansion in a generalized basis and noise-robustness experiments."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError

__all__ = [
    "Expansion",
    "NoiseSuiteResult",
    "NoiseTrialResult",
    "expand",
    "metric",
    "noise_trial_suite",
    "orthonormal_baseline",
    "reconstruct_with_noise",
    "trial_rng",
]


def _vector(v, d, name="V") -> np.ndarray:
    v = np.asarray(v, dtype=complex).reshape(-1)
    if v.shape[0] != d:
        raise DimensionError(f"{name} has dimension {v.shape[0]}, expected {d}")
    return v


@dataclass(frozen=True)
class Expansion:
    components: np.ndarray  # (n, d), row i is |V(i)>
    source: np.ndarray

    def total(self) -> np.ndarray:
        return self.components.sum(axis=0)


def expand(v, gb) -> Expansion:
    """Split V into the n components (d/n) sigma(i) V."""
    v = _vector(v, gb.d)
    comps = (gb.d / gb.n) * np.einsum("iab,b->ia", gb.sigmas, v)
    return Expansion(comps, v)


def metric(gb) -> np.ndarray:
    """Operator metric g(i, j) = (d/n)^2 sigma(i) sigma(j), shape (n, n, d, d)."""
    c = (gb.d / gb.n) ** 2
    return c * np.einsum("iab,jbc->ijac", gb.sigmas, gb.sigmas)


@dataclass(frozen=True)
class NoiseTrialResult:
    eps: float
    eps_d: float
    eps_nd: float
    noise: np.ndarray
    eps_orth: float | None = None
    seed: tuple | None = None


def reconstruct_with_noise(v, gb, noise) -> NoiseTrialResult:
    """Perturb each component by a factor (1 + noise[i]) and measure the damage.

    Returns the direct error ||W - V|| together with its diagonal and
    off-diagonal parts computed from the metric; the two agree through
    eps**2 = eps_d + eps_nd.
    """
    v = _vector(v, gb.d)
    noise = np.asarray(noise, dtype=float).reshape(-1)
    if noise.shape[0] != gb.n:
        raise DimensionError(f"need {gb.n} noise values, got {noise.shape[0]}")
    comps = expand(v, gb).components
    w = ((1 + noise)[:, None] * comps).sum(axis=0)
    eps = float(np.linalg.norm(w - v))
    # <V|g(i,j)|V> = <V(i)|V(j)> since sigma is Hermitian
    gram = (comps.conj() @ comps.T).real
    outer = np.outer(noise, noise) * gram
    eps_d = float(np.trace(outer))
    eps_nd = float(outer.sum() - eps_d)
    return NoiseTrialResult(eps, eps_d, eps_nd, noise)


def orthonormal_baseline(v, noise) -> float:
    """Error after perturbing each position-basis coordinate by (1 + noise[a])."""
    v = np.asarray(v, dtype=complex).reshape(-1)
    noise = np.asarray(noise, dtype=float).reshape(-1)
    if noise.shape != v.shape:
        raise DimensionError(f"need {v.shape[0]} noise values, got {noise.shape[0]}")
    w = (1 + noise) * v
    return float(np.linalg.norm(w - v))


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Generator for one trial, fixed by (seed, trial) alone."""
    return np.random.default_rng([seed, trial])


@dataclass(frozen=True)
class NoiseSuiteResult:
    """Per-trial errors for several generalized bases and the orthonormal baseline.

    ``eps[k, t]`` belongs to basis k in trial t; ``eps_orth[t]`` is the
    baseline error of trial t.
    """

    ns: tuple
    eps: np.ndarray
    eps_d: np.ndarray
    eps_nd: np.ndarray
    eps_orth: np.ndarray
    mu: float
    seed: int
    trials: list = field(repr=False, default_factory=list)

    def columns(self) -> list[str]:
        cols = []
        for n in self.ns:
            cols += [f"eps{n}", f"eps{n}D", f"eps{n}ND"]
        return cols + ["eps_orth"]

    def rows(self) -> np.ndarray:
        parts = []
        for k in range(len(self.ns)):
            parts += [self.eps[k], self.eps_d[k], self.eps_nd[k]]
        return np.column_stack(parts + [self.eps_orth])

    def summary(self) -> dict:
        out = {"trials": int(self.eps_orth.shape[0]), "mean_eps_orth": float(self.eps_orth.mean()),
               "std_eps_orth": float(self.eps_orth.std())}
        for k, n in enumerate(self.ns):
            out[f"mean_eps{n}"] = float(self.eps[k].mean())
            out[f"std_eps{n}"] = float(self.eps[k].std())
            out[f"win_rate{n}"] = float(np.mean(self.eps[k] < self.eps_orth))
        return out


def noise_trial_suite(v, bases, mu=0.5, trials=5, seed=0) -> NoiseSuiteResult:
    """Repeat the noisy reconstruction with uniform noise on [-mu, mu].

    `bases` is one generalized basis or a sequence of them. Each trial
    draws n_k values per basis, then d values for the baseline, from a
    generator seeded by (seed, trial index).
    """
    if mu <= 0:
        raise ValueError("mu must be positive")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if hasattr(bases, "sigmas"):
        bases = [bases]
    bases = list(bases)
    d = bases[0].d
    v = _vector(v, d)
    k = len(bases)
    eps = np.empty((k, trials))
    eps_d = np.empty((k, trials))
    eps_nd = np.empty((k, trials))
    eps_orth = np.empty(trials)
    results = []
    for t in range(trials):
        rng = trial_rng(seed, t)
        row = []
        for j, gb in enumerate(bases):
            r = reconstruct_with_noise(v, gb, rng.uniform(-mu, mu, gb.n))
            eps[j, t], eps_d[j, t], eps_nd[j, t] = r.eps, r.eps_d, r.eps_nd
            row.append(r)
        eps_orth[t] = orthonormal_baseline(v, rng.uniform(-mu, mu, d))
        results.append([NoiseTrialResult(r.eps, r.eps_d, r.eps_nd, r.noise, eps_orth[t], (seed, t)) for r in row])
    return NoiseSuiteResult(tuple(gb.n for gb in bases), eps, eps_d, eps_nd, eps_orth, mu, seed, results)
