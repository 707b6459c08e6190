import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_density, random_psd
from cqbounds import linalg
from cqbounds.errors import DimensionMismatch, DimensionOverflow, NotHermitian, NotPSD


def random_hermitian(rng, dim):
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return g + g.conj().T


def test_eigh_identity():
    spec = linalg.eigh(np.eye(2))
    np.testing.assert_allclose(spec.eigenvalues, [1, 1])
    np.testing.assert_allclose(spec.eigenvectors.conj().T @ spec.eigenvectors, np.eye(2), atol=1e-14)


def test_eigh_diagonal_sorted_descending():
    spec = linalg.eigh(np.diag([4.0, 9.0]))
    np.testing.assert_allclose(spec.eigenvalues, [9, 4])
    np.testing.assert_allclose(np.abs(spec.eigenvectors), [[0, 1], [1, 0]])


def test_eigh_random_reconstruction(rng):
    h = random_hermitian(rng, 8)
    spec = linalg.eigh(h)
    assert np.max(np.abs(spec.reconstruct() - h)) <= 1e-10 * 8 * max(1, np.max(np.abs(h)))
    np.testing.assert_allclose(spec.eigenvectors.conj().T @ spec.eigenvectors, np.eye(8), atol=1e-12)
    assert np.all(np.diff(spec.eigenvalues) <= 0)


def test_eigh_rejects_non_hermitian():
    with pytest.raises(NotHermitian):
        linalg.eigh(np.array([[1.0, 1.0], [0.0, 1.0]]))


def test_density_eigenvalues_sum_to_one(rng):
    for dim in (2, 3, 5):
        assert abs(linalg.eigh(random_density(rng, dim)).eigenvalues.sum() - 1) <= 1e-10


def test_mat_power_examples(rng):
    np.testing.assert_allclose(linalg.mat_power(np.eye(2), 0.5), np.eye(2), atol=1e-15)
    np.testing.assert_allclose(linalg.mat_power(np.diag([4.0, 0.0]), 0.5), np.diag([2.0, 0.0]), atol=1e-15)
    m = random_psd(rng, 5)
    cube_root = linalg.mat_power(m, 1 / 3)
    np.testing.assert_allclose(cube_root @ cube_root @ cube_root, m, atol=1e-12)
    np.testing.assert_allclose(linalg.mat_power(m, 1.0), m, atol=1e-13)


def test_mat_power_rejects_negative():
    with pytest.raises(NotPSD):
        linalg.mat_power(np.diag([1.0, -0.1]), 0.5)


def test_mat_power_clamps_roundoff():
    out = linalg.mat_power(np.diag([1.0, -1e-13]), 0.5)
    np.testing.assert_allclose(out, np.diag([1.0, 0.0]))


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), rank=st.integers(1, 4),
       a=st.sampled_from([0.25, 0.5, 1.0]), b=st.sampled_from([0.25, 0.5, 1.0]))
def test_mat_power_semigroup(seed, rank, a, b):
    m = random_psd(np.random.default_rng(seed), 4, rank)
    lhs = linalg.mat_power(m, a) @ linalg.mat_power(m, b)
    np.testing.assert_allclose(lhs, linalg.mat_power(m, a + b), atol=1e-9)


def test_pinv_sqrt_examples():
    np.testing.assert_allclose(linalg.pinv_sqrt(np.eye(3)), np.eye(3), atol=1e-15)
    np.testing.assert_allclose(linalg.pinv_sqrt(np.diag([4.0, 0.0])), np.diag([0.5, 0.0]), atol=1e-15)


@pytest.mark.parametrize("rank", [1, 2, 3])
def test_pinv_sqrt_support_projector(rng, rank):
    m = random_psd(rng, 5, rank)
    x = linalg.pinv_sqrt(m)
    # projector oracle from an independent SVD of m
    u, sv, _ = np.linalg.svd(m)
    proj = u[:, :rank] @ u[:, :rank].conj().T
    np.testing.assert_allclose(x @ m @ x, proj, atol=1e-8)
    np.testing.assert_allclose(x @ x @ m, proj, atol=1e-8)
    np.testing.assert_allclose(linalg.support_projector(m), proj, atol=1e-8)


def test_tensor_examples(rng):
    np.testing.assert_array_equal(linalg.tensor(np.eye(2), np.eye(2)), np.eye(4))
    s = random_density(rng, 3)
    assert abs(np.trace(linalg.tensor(s, s)) - 1) <= 1e-12
    np.testing.assert_array_equal(linalg.tensor(np.diag([1, 0]), np.diag([0, 1])), np.diag([0, 1, 0, 0]))


def test_tensor_associative(rng):
    # dyadic entries keep every product exact, so equality is bitwise
    a, b, c = (rng.integers(-8, 9, size=(2, 2)) / 8 + 1j * rng.integers(-8, 9, size=(2, 2)) / 8 for _ in range(3))
    left = linalg.tensor(linalg.tensor(a, b), c)
    right = linalg.tensor(a, linalg.tensor(b, c))
    np.testing.assert_array_equal(left, right)


def test_tensor_overflow():
    with pytest.raises(DimensionOverflow):
        linalg.tensor(np.eye(64), np.eye(65))
    with pytest.raises(DimensionOverflow):
        linalg.tensor(np.eye(4), np.eye(4), cap=8)


def test_trace_product_examples(rng):
    m = random_hermitian(rng, 4)
    assert linalg.trace_product(np.eye(4), m) == pytest.approx(np.trace(m))
    assert linalg.trace_product(np.diag([1, 2]), np.diag([3, 4])) == 11
    a, b = random_hermitian(rng, 4), random_hermitian(rng, 4)
    assert abs(linalg.trace_product(a, b) - linalg.trace_product(b, a)) <= 1e-12
    assert abs(linalg.trace_product(a, b) - np.trace(a @ b)) <= 1e-12
    assert abs(linalg.trace_product(a, b).imag) <= 1e-10


def test_trace_product_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        linalg.trace_product(np.eye(2), np.eye(3))
