import numpy as np
import pytest

from genbasis import (
    example_vector,
    expand,
    generalized_basis,
    metric,
    noise_trial_suite,
    orthonormal_baseline,
    reconstruct_with_noise,
)
from genbasis.errors import DimensionError
from genbasis.mobius import PreBasis

COMPONENTS_I = np.array([
    [0.094 + 0.357j, 0.103 - 0.090j],
    [-0.060 - 0.004j, 0.309 - 0.142j],
    [0.223 + 0.163j, 0.361 - 0.025j],
])


def random_vector(rng, d):
    v = rng.normal(size=d) + 1j * rng.normal(size=d)
    return v / np.linalg.norm(v)


def test_example_components(gb3):
    e = expand(example_vector(), gb3)
    assert np.abs(e.components - COMPONENTS_I).max() <= 1e-3
    assert np.abs(e.total() - example_vector()).max() < 1e-12


def test_orthonormal_expansion(rng):
    gb = generalized_basis(PreBasis.from_vectors(np.eye(3)))
    v = random_vector(rng, 3)
    np.testing.assert_allclose(expand(v, gb).components, np.diag(v), atol=1e-12)


def test_completeness(suite):
    rng = np.random.default_rng(5)
    for pb in suite[:10]:
        gb = generalized_basis(pb)
        for _ in range(100):
            v = random_vector(rng, gb.d)
            assert np.linalg.norm(expand(v, gb).total() - v) <= 1e-10


def test_dimension_mismatch(gb3):
    with pytest.raises(DimensionError):
        expand([1, 0, 0], gb3)
    with pytest.raises(DimensionError):
        reconstruct_with_noise(example_vector(), gb3, [0.1, 0.2])
    with pytest.raises(DimensionError):
        orthonormal_baseline(example_vector(), [0.1])


def test_metric(gb3, gb4, rng):
    for gb in (gb3, gb4):
        g = metric(gb)
        assert g.shape == (gb.n, gb.n, 2, 2)
        assert np.abs(g.sum(axis=(0, 1)) - np.eye(2)).max() < 1e-12
        assert np.abs(g - g.conj().transpose(1, 0, 3, 2)).max() < 1e-15
        for i in range(gb.n):
            assert np.linalg.eigvalsh(g[i, i])[0] >= -1e-10
        v, u = random_vector(rng, 2), random_vector(rng, 2)
        assert abs(np.einsum("a,ijab,b->", v.conj(), g, v) - 1) < 1e-10
        assert abs(np.einsum("a,ijab,b->", v.conj(), g, u) - np.vdot(v, u)) < 1e-10


def test_zero_noise(gb3):
    r = reconstruct_with_noise(example_vector(), gb3, np.zeros(3))
    assert r.eps_d == r.eps_nd == 0
    assert r.eps < 1e-12  # direct norm carries rounding from sum V(i) - V


def test_uniform_noise_scales(gb4):
    v = example_vector()
    r = reconstruct_with_noise(v, gb4, np.full(4, -0.3))
    assert r.eps == pytest.approx(0.3, abs=1e-12)


def test_error_split_against_metric(gb3, rng):
    v = example_vector()
    g = metric(gb3)
    for _ in range(20):
        noise = rng.uniform(-0.5, 0.5, 3)
        r = reconstruct_with_noise(v, gb3, noise)
        q = np.einsum("a,ijab,b->ij", v.conj(), g, v).real
        eps_d = sum(noise[i] ** 2 * q[i, i] for i in range(3))
        eps_nd = sum(noise[i] * noise[j] * q[i, j] for i in range(3) for j in range(3) if i != j)
        assert r.eps_d == pytest.approx(eps_d, abs=1e-12)
        assert r.eps_nd == pytest.approx(eps_nd, abs=1e-12)
        assert abs(r.eps ** 2 - (r.eps_d + r.eps_nd)) < 1e-12


def test_orthonormal_baseline(rng):
    assert orthonormal_baseline(example_vector(), [0, 0]) == 0
    assert orthonormal_baseline([1, 0], [-0.4, 0.9]) == pytest.approx(0.4)
    v = random_vector(rng, 4)
    noise = rng.uniform(-0.5, 0.5, 4)
    closed = np.sqrt(np.sum(noise ** 2 * np.abs(v) ** 2))
    assert orthonormal_baseline(v, noise) == pytest.approx(closed, abs=1e-12)


def test_suite_structure_and_determinism(gb3, gb4):
    a = noise_trial_suite(example_vector(), [gb3, gb4], trials=5, seed=11)
    b = noise_trial_suite(example_vector(), [gb3, gb4], trials=5, seed=11)
    assert a.columns() == ["eps3", "eps3D", "eps3ND", "eps4", "eps4D", "eps4ND", "eps_orth"]
    assert a.rows().shape == (5, 7)
    assert np.array_equal(a.rows(), b.rows())
    c = noise_trial_suite(example_vector(), [gb3, gb4], trials=1, seed=11)
    assert np.array_equal(c.rows()[0], a.rows()[0])
    assert not np.array_equal(noise_trial_suite(example_vector(), gb3, trials=5, seed=12).eps[0], a.eps[0])
    assert np.abs(a.eps ** 2 - a.eps_d - a.eps_nd).max() < 1e-10
    assert all(t[0].seed == (11, k) for k, t in enumerate(a.trials))


def test_suite_summary(gb3):
    s = noise_trial_suite(example_vector(), gb3, trials=50, seed=1).summary()
    assert s["trials"] == 50
    assert 0 <= s["win_rate3"] <= 1
    assert {"mean_eps3", "std_eps3", "mean_eps_orth", "std_eps_orth"} <= s.keys()


def test_suite_arguments(gb3):
    with pytest.raises(ValueError):
        noise_trial_suite(example_vector(), gb3, mu=0)
    with pytest.raises(ValueError):
        noise_trial_suite(example_vector(), gb3, trials=0)
