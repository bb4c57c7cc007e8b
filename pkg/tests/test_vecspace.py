import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra.numpy import arrays

from oracles import rotation
from symcone.errors import NotSymmetric
from symcone.vecspace import expm, nullspace, span_basis, span_residual, sym_eig


def finite(shape, bound=3.0):
    return arrays(float, shape, elements=st.floats(-bound, bound, allow_nan=False))


@pytest.mark.parametrize("A, expected", [
    (np.diag([2.0, 1.0]), [1.0, 2.0]),
    (np.eye(3), [1.0, 1.0, 1.0]),
    (np.array([[0.0, 1.0], [1.0, 0.0]]), [-1.0, 1.0]),
])
def test_sym_eig_examples(A, expected):
    w, U = sym_eig(A)
    np.testing.assert_allclose(w, expected, atol=1e-12)
    np.testing.assert_allclose(U.T @ U, np.eye(len(w)), atol=1e-9)


def test_sym_eig_rejects_asymmetric():
    with pytest.raises(NotSymmetric):
        sym_eig(np.array([[1.0, 2.0], [0.0, 1.0]]))


@given(finite((5, 5), 10.0))
def test_sym_eig_reconstructs(B):
    A = (B + B.T) / 2
    w, U = sym_eig(A)
    assert np.all(np.diff(w) >= 0)
    assert np.max(np.abs(A - U @ np.diag(w) @ U.T)) <= 1e-9 * (1 + np.max(np.abs(A)))


def test_expm_examples():
    np.testing.assert_allclose(expm(np.zeros((3, 3))), np.eye(3), atol=1e-15)
    np.testing.assert_allclose(expm(np.diag(np.log([2.0, 3.0]))), np.diag([2.0, 3.0]), atol=1e-12)
    t = 0.7
    np.testing.assert_allclose(expm(np.array([[0.0, -t], [t, 0.0]])), rotation(t), atol=1e-12)


@given(finite((4, 4), 10.0 / 4))
def test_expm_inverse(A):
    # max-entry bound 2.5 keeps the spectral norm <= 10
    np.testing.assert_allclose(expm(A) @ expm(-A), np.eye(4), atol=1e-8)


@given(finite((4, 4), 2.0))
def test_expm_symmetric_path_matches_pade(B):
    A = (B + B.T) / 2
    sym = expm(A)
    pade = expm(A, symmetric=False)
    assert np.max(np.abs(sym - pade)) <= 1e-9 * np.max(np.abs(pade))


@pytest.mark.parametrize("rows, dim, expected_dim", [
    ([[1.0, 0.0]], None, 1),
    ([], 2, 2),
    ([[1.0, 1.0], [1.0, -1.0]], None, 0),
])
def test_nullspace_examples(rows, dim, expected_dim):
    N = nullspace(rows, dim=dim)
    assert N.shape[1] == expected_dim
    if expected_dim:
        np.testing.assert_allclose(N.T @ N, np.eye(expected_dim), atol=1e-10)
    if rows:
        assert np.max(np.abs(np.array(rows) @ N), initial=0.0) <= 1e-10


def test_nullspace_of_row_10_is_e2():
    N = nullspace([[1.0, 0.0]])
    np.testing.assert_allclose(np.abs(N[:, 0]), [0.0, 1.0], atol=1e-15)


@given(finite((3, 6)))
def test_nullspace_orthonormal(R):
    N = nullspace(R)
    np.testing.assert_allclose(N.T @ N, np.eye(N.shape[1]), atol=1e-10)
    assert np.max(np.abs(R @ N), initial=0.0) <= 1e-10 * max(1.0, np.abs(R).max())
    assert N.shape[1] >= 3


def test_nullspace_intersects_operator_kernels():
    A = np.diag([1.0, 0.0, 0.0])
    B = np.diag([0.0, 0.0, 2.0])
    N = nullspace([A, B])
    np.testing.assert_allclose(np.abs(N[:, 0]), [0, 1, 0], atol=1e-15)


def test_span_basis_rank_and_residual():
    mats = [np.eye(2), np.diag([1.0, 0.0]), np.diag([0.0, 3.0])]
    basis = span_basis(mats)
    assert len(basis) == 2
    assert span_residual(np.diag([5.0, -1.0]), basis) < 1e-12
    assert span_residual(np.array([[0.0, 1.0], [0.0, 0.0]]), basis) == pytest.approx(1.0)
