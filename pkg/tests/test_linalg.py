import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_unitary
from genbasis.errors import DimensionError, ValidationError
from genbasis.linalg import (
    fourier_matrix,
    hermitian_eig,
    hermitian_matrix_function,
    projector_onto_span,
)

S5 = math.sqrt(5)


def random_hermitian(rng, d):
    z = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    return (z + z.conj().T) / 2


def charpoly_roots(h):
    """Eigenvalues via Faddeev-LeVerrier coefficients and companion-matrix roots."""
    d = h.shape[0]
    coeffs = [1.0 + 0j]
    m = np.zeros_like(h)
    eye = np.eye(d)
    for k in range(1, d + 1):
        m = h @ m + coeffs[-1] * eye
        coeffs.append(-np.trace(h @ m) / k)
    return np.sort(np.roots(coeffs).real)


class TestProjector:
    def test_single_position_state(self):
        np.testing.assert_allclose(projector_onto_span([[1, 0]]), [[1, 0], [0, 0]], atol=1e-12)

    def test_second_example_state(self):
        p = projector_onto_span([np.array([1, 2j]) / S5])
        np.testing.assert_allclose(p, np.array([[1, -2j], [2j, 4]]) / 5, atol=1e-12)

    def test_full_rank_gives_identity(self):
        p = projector_onto_span([[1, 0.3], [0.2j, 1]])
        assert np.array_equal(p, np.eye(2))

    def test_empty_input(self):
        assert np.array_equal(projector_onto_span([], dim=3), np.zeros((3, 3)))
        assert np.array_equal(projector_onto_span(np.zeros((0, 2))), np.zeros((2, 2)))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            projector_onto_span([[1, 0], [1, 0, 0]])

    def test_numerically_dependent_inputs_keep_rank(self):
        v = np.array([1, 1j, 0]) / math.sqrt(2)
        p = projector_onto_span([v, v * (1 + 1e-14)])
        assert abs(np.trace(p).real - 1) < 1e-10

    def test_properties(self, rng):
        for _ in range(30):
            d = int(rng.integers(2, 6))
            k = int(rng.integers(1, d))
            vs = rng.normal(size=(k, d)) + 1j * rng.normal(size=(k, d))
            p = projector_onto_span(vs)
            assert np.abs(p - p.conj().T).max() < 1e-10
            assert np.abs(p @ p - p).max() < 1e-10
            for v in vs:
                assert np.abs(p @ v - v).max() < 1e-10
            u = random_unitary(rng, d)
            pu = projector_onto_span(vs @ u.T)
            assert np.abs(pu - u @ p @ u.conj().T).max() < 1e-10

    def test_non_additivity(self):
        v1, v2 = np.array([1, 0]), np.array([1, 2j]) / S5
        p12 = projector_onto_span([v1, v2])
        gap = np.abs(p12 - projector_onto_span([v1]) - projector_onto_span([v2])).max()
        assert gap > 0.1

    def test_additive_when_orthogonal(self, rng):
        q, _ = np.linalg.qr(rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4)))
        vs = q.T[:3]
        total = sum(projector_onto_span([v]) for v in vs)
        assert np.abs(projector_onto_span(vs) - total).max() < 1e-12


class TestFourier:
    def test_small(self):
        np.testing.assert_allclose(fourier_matrix(1), [[1]])
        np.testing.assert_allclose(fourier_matrix(2), np.array([[1, 1], [1, -1]]) / math.sqrt(2), atol=1e-15)

    @pytest.mark.parametrize("d", [2, 3, 4, 7])
    def test_unitary(self, d):
        f = fourier_matrix(d)
        assert np.abs(f @ f.conj().T - np.eye(d)).max() < 1e-12

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            fourier_matrix(0)


class TestEig:
    def test_diagonal(self):
        w, v = hermitian_eig(np.diag([1.0, 2.0]))
        np.testing.assert_allclose(w, [1, 2])
        np.testing.assert_allclose(v, np.eye(2), atol=1e-15)

    def test_qubit_hamiltonian(self):
        h = np.eye(2) + np.array([[0, 1 + 1j], [1 - 1j, 0]])
        w, _ = hermitian_eig(h)
        np.testing.assert_allclose(w, [1 - math.sqrt(2), 1 + math.sqrt(2)], atol=1e-12)

    def test_against_characteristic_polynomial(self, rng):
        for _ in range(20):
            h = random_hermitian(rng, 4)
            w, v = hermitian_eig(h)
            np.testing.assert_allclose(w, charpoly_roots(h), atol=1e-8)
            assert np.abs(h @ v - v * w).max() < 1e-10
            assert np.abs(v.conj().T @ v - np.eye(4)).max() < 1e-10
            rec = (v * w) @ v.conj().T
            assert np.abs(rec - h).max() <= 1e-10 * np.abs(h).max()

    def test_phase_convention(self, rng):
        h = random_hermitian(rng, 3)
        _, v = hermitian_eig(h)
        for col in v.T:
            pivot = col[np.argmax(np.abs(col))]
            assert pivot.real > 0 and abs(pivot.imag) < 1e-15
        _, v2 = hermitian_eig(h)
        assert np.array_equal(v, v2)

    def test_rejects_non_hermitian(self):
        with pytest.raises(ValidationError, match=r"H\[0,1\]"):
            hermitian_eig([[1, 2], [0, 1]])


class TestMatrixFunction:
    def test_identity_function(self, rng):
        h = random_hermitian(rng, 3)
        assert np.abs(hermitian_matrix_function(h, lambda x: x) - h).max() < 1e-12

    def test_square(self):
        np.testing.assert_allclose(hermitian_matrix_function(np.diag([2.0, 3.0]), np.square), np.diag([4, 9]),
                                   atol=1e-12)

    def test_scalar_only_function(self):
        np.testing.assert_allclose(hermitian_matrix_function(np.diag([0.0, 1.0]), math.exp),
                                   np.diag([1, math.e]), atol=1e-12)

    @pytest.mark.parametrize("beta,lam", [(0.5, -1.0), (1.0, 0.3), (2.0, 2.0)])
    def test_boltzmann_closed_form(self, beta, lam):
        theta = np.eye(2) + lam * np.array([[0, 1 + 1j], [1 - 1j, 0]])
        e = hermitian_matrix_function(theta, lambda w: np.exp(-beta * w))
        x = beta * lam * math.sqrt(2)
        c, s = math.cosh(x), math.sinh(x)
        expected = math.exp(-beta) * np.array([[c, -(1 + 1j) / math.sqrt(2) * s], [-(1 - 1j) / math.sqrt(2) * s, c]])
        assert np.abs(e - expected).max() < 1e-12

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32 - 1), st.integers(min_value=1, max_value=5))
    def test_exp_log_round_trip(self, seed, d):
        h = random_hermitian(np.random.default_rng(seed), d)
        back = hermitian_matrix_function(hermitian_matrix_function(h, np.exp), np.log)
        assert np.abs(back - h).max() < 1e-8

    def test_rejects_non_finite(self):
        with pytest.raises(ValidationError):
            hermitian_matrix_function(np.diag([-1.0, 1.0]), np.log)
