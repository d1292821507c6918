import numpy as np
import pytest

from conftest import random_prebasis, random_unitary
from genbasis import conjugate_basis, example_i, fourier_matrix, generalized_basis
from genbasis.errors import ResidualError, ValidationError
from genbasis.mobius import PreBasis, build_projector_cache, mobius_operator, subset_mask
from genbasis.renorm import tau_shapley, tau_varpi, varpi

SIGMA_I = [
    [[0.825, -0.125 + 0.100j], [-0.125 - 0.100j, 0.175]],
    [[0.225, -0.125 - 0.200j], [-0.125 + 0.200j, 0.775]],
    [[0.450, 0.250 + 0.100j], [0.250 - 0.100j, 0.550]],
]
# rounding variants 0.066/0.067 as printed
SIGMA_II = [
    [[0.850, -0.150 + 0.066j], [-0.150 - 0.066j, 0.150]],
    [[0.316, -0.150 - 0.200j], [-0.150 + 0.200j, 0.684]],
    [[0.516, 0.183 + 0.067j], [0.183 - 0.066j, 0.484]],
    [[0.316, 0.117 + 0.067j], [0.117 - 0.066j, 0.684]],
]
SIGMA_I_FOURIER = [
    [[0.375, 0.325 - 0.100j], [0.325 + 0.100j, 0.625]],
    [[0.375, -0.275 + 0.200j], [-0.275 - 0.200j, 0.625]],
    [[0.750, -0.050 - 0.100j], [-0.050 + 0.100j, 0.250]],
]


def exact_sigma_i():
    """Exact rationals of the 3-state basis, from the allocation rule by hand."""
    p1 = np.array([[1, 0], [0, 0]])
    d12 = np.array([[-1, 2j], [-2j, 1]]) / 5
    d13 = np.array([[-1, -1], [-1, 1]]) / 2
    d123 = np.array([[-3, 5 - 4j], [5 + 4j, -7]]) / 10
    return 1.5 * (p1 + (d12 + d13) / 2 + d123 / 3)


def test_example_i_matches_printed(gb3):
    assert np.abs(gb3.sigmas - np.array(SIGMA_I)).max() <= 1e-3 + 1e-12
    assert np.abs(gb3[0] - exact_sigma_i()).max() < 1e-12
    np.testing.assert_allclose(gb3[0], [[0.825, -0.125 + 0.1j], [-0.125 - 0.1j, 0.175]], atol=1e-12)
    assert gb3.resolution_residual <= 1e-10
    assert np.abs(sum(gb3) * 2 / 3 - np.eye(2)).max() < 1e-12


def test_example_ii_matches_printed(gb4):
    assert np.abs(gb4.sigmas - np.array(SIGMA_II)).max() <= 2e-3
    assert gb4.resolution_residual <= 1e-10


def test_fourier_conjugate(gb3):
    f = fourier_matrix(2)
    gt = conjugate_basis(gb3, f)
    assert np.abs(gt.sigmas - np.array(SIGMA_I_FOURIER)).max() <= 1e-3 + 1e-12
    rebuilt = generalized_basis(example_i().transformed(f))
    assert np.abs(rebuilt.sigmas - gt.sigmas).max() < 1e-9


def test_identity_conjugation(gb4):
    assert np.abs(conjugate_basis(gb4, np.eye(2)).sigmas - gb4.sigmas).max() < 1e-15


def test_random_unitary_covariance(rng):
    for d, n in [(2, 4), (3, 5), (4, 6)]:
        pb = random_prebasis(rng, d, n)
        u = random_unitary(rng, d)
        a = conjugate_basis(generalized_basis(pb), u)
        b = generalized_basis(pb.transformed(u))
        assert np.abs(a.sigmas - b.sigmas).max() < 1e-9


def test_non_unitary_rejected(gb3):
    with pytest.raises(ValidationError):
        conjugate_basis(gb3, [[1, 1], [0, 1]])
    with pytest.raises(ValidationError):
        conjugate_basis(gb3, np.eye(3))


def test_shapley_allocation_for_state_one():
    cache = build_projector_cache(example_i())
    d = lambda *k: mobius_operator(subset_mask(k), cache)
    manual = d(0) + (d(0, 1) + d(0, 2)) / 2 + d(0, 1, 2) / 3
    assert np.abs(tau_shapley(0, cache) - manual).max() < 1e-12
    assert np.abs(tau_varpi(0, cache) - tau_shapley(0, cache)).max() < 1e-12


def test_varpi_weights_d2_n3():
    # weights 1/(n C(n-1,|A|)) for |A| = 0, 1, 2
    cache = build_projector_cache(example_i())
    manual = (varpi(0, 0, cache) / 3 + (varpi(0, 0b010, cache) + varpi(0, 0b100, cache)) / 6
              + varpi(0, 0b110, cache) / 3)
    assert np.abs(tau_varpi(0, cache) - manual).max() < 1e-15


def test_varpi_is_projector(rng):
    cache = build_projector_cache(random_prebasis(rng, 3, 6))
    for i in range(6):
        for a in range(64):
            if a >> i & 1:
                continue
            w = varpi(i, a, cache)
            assert np.abs(w @ w - w).max() < 1e-10
    with pytest.raises(ValueError):
        varpi(0, 1, cache)


def test_tau_trace(rng):
    cache = build_projector_cache(random_prebasis(rng, 2, 5))
    for i in range(5):
        assert abs(np.trace(tau_shapley(i, cache)) - 0.4) < 1e-10


def test_index_out_of_range():
    cache = build_projector_cache(example_i())
    with pytest.raises(IndexError):
        tau_shapley(3, cache)
    with pytest.raises(IndexError):
        tau_varpi(-1, cache)


def test_orthonormal_gives_projectors():
    pb = PreBasis.from_vectors(np.eye(3))
    gb = generalized_basis(pb)
    for i in range(3):
        p = np.zeros((3, 3))
        p[i, i] = 1
        assert np.abs(gb[i] - p).max() < 1e-12


def test_suite_invariants(suite):
    for pb in suite:
        gb = generalized_basis(pb)
        assert gb.resolution_residual <= 1e-10
        for s in gb:
            assert np.abs(s - s.conj().T).max() == 0
            assert np.linalg.eigvalsh(s)[0] >= -1e-10
            assert abs(np.trace(s) - 1) < 1e-10


def test_accepts_raw_array():
    gb = generalized_basis(example_i().vectors)
    assert gb.n == 3 and gb.d == 2 and len(gb) == 3


def test_degenerate_prebasis_aborts():
    # the allocation always sums to Pi(Omega), so only a set that does not
    # span the space can fail to resolve the identity
    v = np.array([[1, 0], [1j, 1e-13], [-1, 0]])
    with pytest.raises(ResidualError) as info:
        generalized_basis(v)
    assert info.value.residual > 1e-9


def test_sigmas_read_only(gb3):
    with pytest.raises(ValueError):
        gb3.sigmas[0, 0, 0] = 0
