"""Dense real linear algebra on R^d with the standard inner product.

Elements are 1-D float arrays, operators are d x d float arrays; the adjoint
of an operator is its transpose.
"""
import numpy as np
import scipy.linalg

from .config import DEFAULT
from .errors import NotSymmetric


def as_element(x, dim=None):
    x = np.asarray(x, dtype=float)
    if x.ndim != 1:
        raise ValueError(f"element must be 1-D, got shape {x.shape}")
    if dim is not None and x.shape[0] != dim:
        raise ValueError(f"element has length {x.shape[0]}, expected {dim}")
    if not np.all(np.isfinite(x)):
        raise ValueError("element has non-finite entries")
    return x


def as_operator(A, dim=None):
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"operator must be square, got shape {A.shape}")
    if dim is not None and A.shape[0] != dim:
        raise ValueError(f"operator has size {A.shape[0]}, expected {dim}")
    if not np.all(np.isfinite(A)):
        raise ValueError("operator has non-finite entries")
    return A


def max_abs(A):
    """Entrywise max-norm; 0.0 for empty input."""
    A = np.asarray(A)
    return float(np.max(np.abs(A))) if A.size else 0.0


def inner(x, y):
    return float(np.dot(x, y))


def commutator(A, B):
    return A @ B - B @ A


def is_symmetric(A, tol=DEFAULT.symmetry):
    return max_abs(A - A.T) <= tol


def sym_eig(A, tol=DEFAULT.symmetry):
    """Eigendecomposition of a symmetric operator.

    Returns ``(w, U)`` with ``w`` ascending and ``A = U diag(w) U^T``.
    Raises `NotSymmetric` when ``max |A - A^T| > tol``.
    """
    A = as_operator(A)
    if not is_symmetric(A, tol):
        raise NotSymmetric(f"asymmetry {max_abs(A - A.T):.3e} exceeds {tol:.1e}")
    w, U = np.linalg.eigh((A + A.T) / 2)
    return w, U


def expm(A, symmetric=None):
    """Matrix exponential.

    Symmetric input goes through the eigendecomposition; everything else
    through Pade scaling-and-squaring. Pass ``symmetric=False`` to force the
    general path.
    """
    A = as_operator(A)
    if symmetric is None:
        symmetric = is_symmetric(A)
    if symmetric:
        w, U = sym_eig(A)
        return (U * np.exp(w)) @ U.T
    return scipy.linalg.expm(A)


def nullspace(rows, dim=None, rtol=DEFAULT.rank):
    """Orthonormal basis of ``{x : R x = 0}`` as the columns of a matrix.

    ``rows`` is a stacked ``m x d`` matrix or a list of row vectors/matrices
    (matrices are stacked vertically, so a list of operators yields the
    intersection of their kernels). With no rows, ``dim`` is required and the
    whole space is returned.
    """
    R = _stack_rows(rows, dim)
    d = R.shape[1]
    if R.shape[0] == 0:
        return np.eye(d)
    _, s, Vt = np.linalg.svd(R)
    cutoff = rtol * s[0] if s.size and s[0] > 0 else 0.0
    rank = int(np.sum(s > cutoff)) if s.size and s[0] > 0 else 0
    return Vt[rank:].T.copy()


def _stack_rows(rows, dim):
    if isinstance(rows, np.ndarray) and rows.ndim == 2:
        return rows.astype(float)
    blocks = [np.atleast_2d(np.asarray(r, dtype=float)) for r in rows]
    if not blocks:
        if dim is None:
            raise ValueError("dim is required for an empty row list")
        return np.zeros((0, dim))
    return np.vstack(blocks)


def span_basis(mats, rtol=DEFAULT.rank):
    """Frobenius-orthonormal basis of the span of a list of operators."""
    mats = [np.asarray(M, dtype=float) for M in mats]
    if not mats:
        return []
    d = mats[0].shape[0]
    S = np.array([M.ravel() for M in mats])
    _, s, Vt = np.linalg.svd(S, full_matrices=False)
    if s[0] == 0:
        return []
    rank = int(np.sum(s > rtol * s[0]))
    return [Vt[i].reshape(d, d) for i in range(rank)]


def span_residual(M, basis):
    """Frobenius norm of the part of ``M`` orthogonal to an orthonormal basis."""
    v = np.asarray(M, dtype=float).ravel()
    if basis:
        B = np.array([b.ravel() for b in basis])
        v = v - B.T @ (B @ v)
    return float(np.linalg.norm(v))


def span_rank(mats, rtol=DEFAULT.rank):
    return len(span_basis(mats, rtol))
