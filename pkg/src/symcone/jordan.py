"""Euclidean Jordan algebras in coordinates.

Four families are built in: the orthant algebra R^n with the coordinatewise
product, the spin factor R^(n-1) + R, real symmetric k x k matrices with
(AB + BA)/2, and finite direct sums of these. Every family carries the
standard dot product of its coordinates as the associative inner product.

Symmetric matrices are vectorized as the diagonal followed by the strict
upper triangle (row-major) scaled by sqrt(2), so that trace(AB) equals the
coordinate dot product.
"""
from dataclasses import dataclass, field
from typing import Callable, Tuple

import numpy as np

from .config import DEFAULT
from .errors import InvalidDescriptor, NoConvergence, NotInterior, NotInvertible
from .vecspace import as_element, commutator, max_abs

SQRT2 = np.sqrt(2.0)


# --- descriptors ----------------------------------------------------------

@dataclass(frozen=True)
class Orthant:
    n: int

    @property
    def dim(self):
        return self.n

    @property
    def name(self):
        return f"orthant{self.n}"


@dataclass(frozen=True)
class Spin:
    n: int

    @property
    def dim(self):
        return self.n

    @property
    def name(self):
        return f"spin{self.n}"


@dataclass(frozen=True)
class SymMatrices:
    k: int

    @property
    def dim(self):
        return self.k * (self.k + 1) // 2

    @property
    def name(self):
        return f"sym{self.k}"


@dataclass(frozen=True)
class DirectSum:
    parts: Tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))

    @property
    def dim(self):
        return sum(p.dim for p in self.parts)

    @property
    def name(self):
        return "+".join(p.name for p in self.parts)


def validate_descriptor(desc):
    if isinstance(desc, bool):
        raise InvalidDescriptor(f"not a descriptor: {desc!r}")
    if isinstance(desc, Orthant):
        ok = isinstance(desc.n, int) and desc.n >= 1
    elif isinstance(desc, Spin):
        ok = isinstance(desc.n, int) and desc.n >= 2
    elif isinstance(desc, SymMatrices):
        ok = isinstance(desc.k, int) and desc.k >= 1
    elif isinstance(desc, DirectSum):
        if not desc.parts:
            raise InvalidDescriptor("direct sum needs at least one part")
        for p in desc.parts:
            validate_descriptor(p)
        ok = True
    else:
        raise InvalidDescriptor(f"not a descriptor: {desc!r}")
    if not ok:
        raise InvalidDescriptor(f"invalid dimensions in {desc!r}")


# --- symmetric-matrix coordinates ----------------------------------------

def sym_to_vec(A):
    """Symmetric matrix -> coordinates (diagonal, then sqrt(2) * upper)."""
    A = np.asarray(A, dtype=float)
    k = A.shape[0]
    iu = np.triu_indices(k, 1)
    return np.concatenate([np.diag(A), SQRT2 * A[iu]])


def vec_to_sym(x, k):
    x = np.asarray(x, dtype=float)
    A = np.diag(x[:k])
    iu = np.triu_indices(k, 1)
    A[iu] = x[k:] / SQRT2
    A[(iu[1], iu[0])] = x[k:] / SQRT2
    return A


# --- products per family --------------------------------------------------

def _orthant_product(x, y):
    return x * y


def _spin_product(x, y):
    a, alpha = x[:-1], x[-1]
    b, beta = y[:-1], y[-1]
    return np.concatenate([beta * a + alpha * b, [np.dot(a, b) + alpha * beta]])


def _sym_product(k):
    def product(x, y):
        A, B = vec_to_sym(x, k), vec_to_sym(y, k)
        return sym_to_vec((A @ B + B @ A) / 2)
    return product


def _sum_product(parts):
    offsets = np.cumsum([0] + [p.dim for p in parts])

    def product(x, y):
        return np.concatenate([
            p.product(x[lo:hi], y[lo:hi])
            for p, lo, hi in zip(parts, offsets[:-1], offsets[1:])
        ])
    return product


# --- the algebra ----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class JordanAlgebra:
    """A finite-dimensional unital JH-algebra in coordinates.

    ``tensor[i, j, k]`` is coordinate ``k`` of ``b_i b_j`` for the standard
    basis ``b``; it backs the multiplication operators.
    """
    descriptor: object
    dim: int
    identity: np.ndarray
    product: Callable = field(repr=False)
    tensor: np.ndarray = field(repr=False)

    def mul(self, x, y):
        return self.product(np.asarray(x, dtype=float), np.asarray(y, dtype=float))

    def inner(self, x, y):
        return float(np.dot(x, y))

    def basis(self):
        return np.eye(self.dim)


def make_algebra(desc):
    """Build the `JordanAlgebra` for a descriptor."""
    validate_descriptor(desc)
    if isinstance(desc, Orthant):
        product, identity = _orthant_product, np.ones(desc.n)
    elif isinstance(desc, Spin):
        product = _spin_product
        identity = np.zeros(desc.n)
        identity[-1] = 1.0
    elif isinstance(desc, SymMatrices):
        product = _sym_product(desc.k)
        identity = sym_to_vec(np.eye(desc.k))
    else:
        parts = [make_algebra(p) for p in desc.parts]
        product = _sum_product(parts)
        identity = np.concatenate([p.identity for p in parts])
    d = desc.dim
    E = np.eye(d)
    tensor = np.array([[product(E[i], E[j]) for j in range(d)] for i in range(d)])
    return JordanAlgebra(desc, d, identity, product, tensor)


# --- derived operators ----------------------------------------------------

def lmul(alg, a):
    """Matrix of x -> a x."""
    a = as_element(a, alg.dim)
    return np.einsum("i,ijk->kj", a, alg.tensor)


def lmul_batch(alg, A):
    """Stack of multiplication operators for the rows of ``A``."""
    return np.einsum("ni,ijk->nkj", np.atleast_2d(A), alg.tensor)


def square(alg, a):
    return alg.mul(a, a)


def quad(alg, a):
    """Quadratic representation Q_a = 2 L_a^2 - L_{a^2}."""
    L = lmul(alg, a)
    return 2 * L @ L - lmul(alg, square(alg, a))


def triple(alg, a, b, c):
    """Jordan triple product {a,b,c} = (ab)c + a(bc) - b(ac)."""
    m = alg.mul
    return m(m(a, b), c) + m(a, m(b, c)) - m(b, m(a, c))


def box(alg, a, b):
    """Box operator L_{ab} + [L_a, L_b]."""
    return lmul(alg, alg.mul(a, b)) + commutator(lmul(alg, a), lmul(alg, b))


def trace_form(alg, a, b):
    return float(np.trace(box(alg, a, b)))


def inverse(alg, a, tol=DEFAULT):
    """Jordan inverse computed as Q_a^{-1}(a).

    Raises `NotInvertible` when Q_a is numerically singular, i.e. its
    smallest singular value is below ``tol.invertible`` times the largest.
    """
    a = as_element(a, alg.dim)
    Q = quad(alg, a)
    s = np.linalg.svd(Q, compute_uv=False)
    if s[0] == 0 or s[-1] <= tol.invertible * s[0]:
        raise NotInvertible(f"Q_a is singular (smallest singular value {s[-1]:.3e})")
    inv = np.linalg.solve(Q, a)
    scale = 1 + np.linalg.norm(a) * np.linalg.norm(inv)
    res = max(
        max_abs(alg.mul(a, inv) - alg.identity),
        max_abs(alg.mul(square(alg, a), inv) - a) / (1 + np.linalg.norm(a)),
    )
    if res > 1e-9 * scale:
        raise NotInvertible(f"inverse identities fail with residual {res:.3e}")
    return inv


def power(alg, a, n):
    """Non-negative integer power (Jordan algebras are power-associative)."""
    if n < 0:
        return power(alg, inverse(alg, a), -n)
    out = alg.identity.copy()
    for _ in range(n):
        out = alg.mul(out, a)
    return out


def min_lmul_eig(alg, x):
    return float(np.linalg.eigvalsh(lmul(alg, x))[0])


def sqrt_interior(alg, x, tol=DEFAULT):
    """Square root in the open cone by Newton's method from the identity."""
    x = as_element(x, alg.dim)
    if min_lmul_eig(alg, x) <= tol.interior:
        raise NotInterior("square root needs an interior point")
    y = alg.identity.copy()
    scale = 1 + np.linalg.norm(x)
    for _ in range(tol.newton_steps):
        r = square(alg, y) - x
        if np.linalg.norm(r) <= tol.newton_residual * scale:
            break
        y = y - np.linalg.solve(2 * lmul(alg, y), r)
    else:
        raise NoConvergence(f"Newton square root stalled at residual {np.linalg.norm(r):.3e}")
    if min_lmul_eig(alg, y) <= tol.interior:
        raise NoConvergence("Newton iterate left the cone")
    return y


# --- sampling -------------------------------------------------------------

def random_element(alg, rng):
    return rng.standard_normal(alg.dim)


def random_interior(alg, rng, shift=0.1):
    a = random_element(alg, rng)
    return square(alg, a) + shift * alg.identity


# --- axiom verification ---------------------------------------------------

@dataclass
class AxiomReport:
    family: str
    trials: int
    tol: float
    residuals: dict

    @property
    def checks(self):
        return {k: v <= self.tol for k, v in self.residuals.items()}

    @property
    def passed(self):
        return all(self.checks.values())

    def to_dict(self):
        return {
            "property": "axioms",
            "family": self.family,
            "trials": self.trials,
            "tol": self.tol,
            "residuals": dict(self.residuals),
            "checks": self.checks,
            "pass": self.passed,
            "max_residual": max(self.residuals.values()),
        }


def verify_axioms(alg, trials=1000, tol=1e-9, rng_seed=0):
    """Max residuals of the JH-algebra axioms over random triples.

    The Jordan-identity residual is relative to ``|a|^3 |b|``; the others
    are absolute.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(rng_seed)
    m, e = alg.mul, alg.identity
    worst = dict.fromkeys(
        ["commutativity", "jordan_identity", "inner_associativity", "unit_law", "jh_positivity"], 0.0)
    for _ in range(trials):
        a, b, c = (random_element(alg, rng) for _ in range(3))
        a2 = m(a, a)
        scale = np.linalg.norm(a) ** 3 * np.linalg.norm(b) or 1.0
        r = {
            "commutativity": max_abs(m(a, b) - m(b, a)),
            "jordan_identity": max_abs(m(a, m(b, a2)) - m(m(a, b), a2)) / scale,
            "inner_associativity": abs(np.dot(m(a, b), c) - np.dot(b, m(a, c))),
            "unit_law": max_abs(m(e, a) - a),
            "jh_positivity": abs(np.dot(a2, e) - np.dot(a, a)),
        }
        for k, v in r.items():
            worst[k] = max(worst[k], float(v))
    return AxiomReport(alg.descriptor.name, trials, tol, worst)
