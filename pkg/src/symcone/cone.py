"""Symmetric cones: membership, self-duality, homogeneity and automorphisms.

A cone is either backed by a Jordan algebra (the open cone of invertible
squares, tested as positive-definiteness of L_x) or by a user-supplied
interior predicate together with a designated interior point. The ambient
inner product is always the coordinate dot product.
"""
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import jordan
from .config import DEFAULT
from .errors import NoInteriorPoint, NotInterior, OracleOnly, Singular
from .reports import CheckReport
from .vecspace import as_element, as_operator, expm, max_abs

DEFAULT_T_GRID = (0.1, 0.5, 1.0, 2.0)


@dataclass(frozen=True, eq=False)
class ConeSpec:
    dim: int
    algebra: Optional[jordan.JordanAlgebra] = None
    oracle: Optional[Callable] = None
    interior_point: Optional[np.ndarray] = None
    lie_basis: Optional[tuple] = None

    @property
    def backing(self):
        return "algebra" if self.algebra is not None else "oracle"

    def with_lie_basis(self, basis):
        return ConeSpec(self.dim, self.algebra, self.oracle, self.interior_point,
                        tuple(np.asarray(X, dtype=float) for X in basis))


def cone_from_algebra(alg, lie_basis=None):
    """The open cone int{a^2} of a Euclidean Jordan algebra."""
    basis = None if lie_basis is None else tuple(np.asarray(X, dtype=float) for X in lie_basis)
    return ConeSpec(alg.dim, algebra=alg, lie_basis=basis)


def cone_from_oracle(dim, oracle, interior_point=None, lie_basis=None):
    """Wrap an interior predicate. Scaling consistency is spot-checked."""
    e = None if interior_point is None else as_element(interior_point, dim)
    if e is not None:
        if not oracle(e):
            raise NotInterior("designated interior point is rejected by the oracle")
        for c in (1e-3, 0.5, 2.0, 1e3):
            if not oracle(c * e):
                raise ValueError(f"oracle is not a cone: rejects {c} * interior point")
    basis = None if lie_basis is None else tuple(np.asarray(X, dtype=float) for X in lie_basis)
    return ConeSpec(dim, oracle=oracle, interior_point=e, lie_basis=basis)


def reference_point(cone):
    if cone.algebra is not None:
        return cone.algebra.identity
    if cone.interior_point is None:
        raise NoInteriorPoint("oracle-backed cone has no designated interior point")
    return cone.interior_point


# --- membership -----------------------------------------------------------

def min_eigs(cone, X):
    """Smallest eigenvalue of L_x for each row of ``X`` (algebra-backed)."""
    if cone.algebra is None:
        raise OracleOnly("min_eigs needs an algebra-backed cone")
    return np.linalg.eigvalsh(jordan.lmul_batch(cone.algebra, X))[:, 0]


def interior_member(cone, x, tol=DEFAULT):
    x = as_element(x, cone.dim)
    if cone.algebra is not None:
        return bool(min_eigs(cone, x[None])[0] > tol.interior)
    return bool(cone.oracle(x))


def closure_member(cone, x, slack=None, tol=DEFAULT):
    """Membership in the closed cone.

    Algebra-backed: min eig of L_x >= -slack (default ``tol.closure``).
    Oracle-backed: the oracle accepts x + eps*s*e for eps = 1e-2 ... 1e-8,
    where s = max(1, |x|/|e|) keeps the nudge relative to the scale of x.
    """
    x = as_element(x, cone.dim)
    if cone.algebra is not None:
        slack = tol.closure if slack is None else slack
        return bool(min_eigs(cone, x[None])[0] >= -slack)
    e = reference_point(cone)
    s = max(1.0, np.linalg.norm(x) / np.linalg.norm(e))
    return all(cone.oracle(x + eps * s * e) for eps in 10.0 ** -np.arange(2, 9))


def closure_member_batch(cone, X, slack=None, tol=DEFAULT):
    X = np.atleast_2d(X)
    if cone.algebra is not None:
        slack = tol.closure if slack is None else slack
        return min_eigs(cone, X) >= -slack
    return np.array([closure_member(cone, x, slack, tol) for x in X])


# --- sampling -------------------------------------------------------------

def _ray_exit(cone, e, z, cap=1e6, steps=60):
    """sup{t : oracle(e + t z)} by doubling and bisection (capped)."""
    hi = 1.0
    while cone.oracle(e + hi * z):
        hi *= 2
        if hi > cap:
            return cap
    lo = 0.0
    for _ in range(steps):
        mid = (lo + hi) / 2
        if cone.oracle(e + mid * z):
            lo = mid
        else:
            hi = mid
    return lo


def sample_interior(cone, rng, n, shift=0.1):
    """Random interior points.

    Algebra-backed: a*a + shift*e with a standard normal. Oracle-backed:
    uniform points on random rays from the interior point, up to the exit.
    """
    if cone.algebra is not None:
        return np.array([jordan.random_interior(cone.algebra, rng, shift) for _ in range(n)])
    e = reference_point(cone)
    out = []
    for _ in range(n):
        z = rng.standard_normal(cone.dim)
        z *= np.linalg.norm(e) / np.linalg.norm(z)
        out.append(e + rng.uniform(0, 0.99) * _ray_exit(cone, e, z) * z)
    return np.array(out)


def sample_closure(cone, rng, n):
    """Random points of the closed cone (squares, or ray exits for oracles)."""
    if cone.algebra is not None:
        alg = cone.algebra
        return np.array([jordan.square(alg, jordan.random_element(alg, rng)) for _ in range(n)])
    e = reference_point(cone)
    out = []
    for _ in range(n):
        z = rng.standard_normal(cone.dim)
        z *= np.linalg.norm(e) / np.linalg.norm(z)
        out.append(e + _ray_exit(cone, e, z) * z)
    return np.array(out)


# --- self-duality ---------------------------------------------------------

def separating_witness(cone, v, rng=None, candidates=256):
    """A closure element x with <v, x> < 0, or None.

    For algebra-backed cones the witness is u*u for an eigenvector u of the
    most negative eigenvalue of L_v, since <v, u*u> = <L_v u, u>.
    """
    v = as_element(v, cone.dim)
    if cone.algebra is not None:
        w, U = np.linalg.eigh(jordan.lmul(cone.algebra, v))
        x = jordan.square(cone.algebra, U[:, 0])
        x = x / np.linalg.norm(x)
        return x if np.dot(v, x) < 0 else None
    rng = np.random.default_rng(0) if rng is None else rng
    X = sample_closure(cone, rng, candidates)
    X = X / np.linalg.norm(X, axis=1, keepdims=True)
    p = X @ v
    i = int(np.argmin(p))
    return X[i] if p[i] < 0 else None


def self_duality_check(cone, trials=500, rng_seed=0, slack=1e-12):
    """Sampled check of Omega = {v : <v, x> > 0 for all x in closure minus 0}.

    Three sampled conditions: interior points pair strictly positively with
    unit closure points; closure pairs have <x, y> >= -slack; points outside
    the closure are separated by an explicit closure element.
    """
    rng = np.random.default_rng(rng_seed)
    V = sample_interior(cone, rng, trials)
    X = sample_closure(cone, rng, trials)
    X = X / np.linalg.norm(X, axis=1, keepdims=True)
    Y = sample_closure(cone, rng, trials)
    Y = Y / np.linalg.norm(Y, axis=1, keepdims=True)

    pair_int = np.einsum("ij,ij->i", V, X)
    pair_clo = np.einsum("ij,ij->i", X, Y)
    worst = 0.0
    witness = None
    interior_ok = bool(np.all(pair_int > 0))
    if not interior_ok:
        i = int(np.argmin(pair_int))
        worst, witness = max(worst, -pair_int[i]), np.stack([V[i], X[i]])
    closure_ok = bool(np.all(pair_clo >= -slack))
    if not closure_ok:
        i = int(np.argmin(pair_clo))
        worst, witness = max(worst, -pair_clo[i]), np.stack([X[i], Y[i]])

    separated = 0
    unseparated = None
    outside = 0
    attempts = 0
    while outside < trials and attempts < 50 * trials:
        attempts += 1
        v = rng.standard_normal(cone.dim)
        if closure_member(cone, v):
            continue
        outside += 1
        if separating_witness(cone, v, rng) is not None:
            separated += 1
        elif unseparated is None:
            unseparated = v
    separation_ok = unseparated is None
    if not separation_ok and witness is None:
        witness = unseparated
    return CheckReport(
        "self-duality", interior_ok and closure_ok and separation_ok, float(worst), witness,
        {"trials": trials, "min_interior_pairing": float(pair_int.min()),
         "min_closure_pairing": float(pair_clo.min()),
         "outside_samples": outside, "separated": separated},
    )


# --- homogeneity and automorphisms ----------------------------------------

def homogeneity_witness(cone, x, y, tol=DEFAULT, trials=50, rng_seed=0):
    """Linear automorphism g with g(x) = y, namely Q_{sqrt y} Q_{sqrt x}^{-1}."""
    if cone.algebra is None:
        raise OracleOnly("homogeneity witness needs an algebra-backed cone")
    alg = cone.algebra
    for p in (x, y):
        if not interior_member(cone, p, tol):
            raise NotInterior(f"{np.asarray(p).tolist()} is not interior")
    Qx = jordan.quad(alg, jordan.sqrt_interior(alg, x, tol))
    Qy = jordan.quad(alg, jordan.sqrt_interior(alg, y, tol))
    g = Qy @ np.linalg.inv(Qx)
    if np.linalg.norm(g @ x - y) > 1e-8 * (1 + np.linalg.norm(y)):
        raise ArithmeticError("homogeneity witness misses its target")
    if not automorphism_check(cone, g, trials, rng_seed):
        raise ArithmeticError("homogeneity witness is not a cone automorphism")
    return g


def automorphism_violation(cone, g, trials=100, rng_seed=0, tol=DEFAULT):
    """First sampled interior point sent outside the cone by g or g^{-1}.

    Returns None when no violation is found. Raises `Singular` for a
    numerically singular g.
    """
    g = as_operator(g, cone.dim)
    s = np.linalg.svd(g, compute_uv=False)
    if s[0] == 0 or s[-1] <= 1e-12 * s[0]:
        raise Singular("operator is singular")
    ginv = np.linalg.inv(g)
    rng = np.random.default_rng(rng_seed)
    e = reference_point(cone)
    n_far = max(1, trials // 2)
    P = np.vstack([e[None],
                   sample_interior(cone, rng, n_far),
                   sample_interior(cone, rng, max(1, trials - n_far), shift=1e-3)
                   if cone.algebra is not None else sample_interior(cone, rng, trials - n_far)])
    for h in (g, ginv):
        Z = P @ h.T
        if cone.algebra is not None:
            # strict positivity of the normalized image: an absolute threshold
            # misclassifies near-boundary images under ill-conditioned g
            ok = min_eigs(cone, Z / np.linalg.norm(Z, axis=1)[:, None]) > 0
        else:
            ok = np.array([cone.oracle(z) for z in Z])
        if not np.all(ok):
            return P[int(np.argmin(ok))]
    return None


def automorphism_check(cone, g, trials=100, rng_seed=0, tol=DEFAULT):
    """g invertible and both g, g^{-1} keep sampled interior points interior."""
    return automorphism_violation(cone, g, trials, rng_seed, tol) is None


def k_member(cone, g, trials=100, rng_seed=0, tol=DEFAULT, orth_tol=1e-9):
    """Membership in K = G(Omega) intersected with the orthogonal group."""
    g = as_operator(g, cone.dim)
    if max_abs(g.T @ g - np.eye(cone.dim)) > orth_tol:
        return False
    return automorphism_check(cone, g, trials, rng_seed, tol)


def lie_algebra_member(cone, X, t_grid=DEFAULT_T_GRID, trials=100, rng_seed=0, tol=DEFAULT):
    """exp(tX) is an automorphism for every t in the symmetric grid."""
    X = as_operator(X, cone.dim)
    ts = sorted({s * t for t in t_grid for s in (1, -1)})
    return all(automorphism_check(cone, expm(t * X), trials, rng_seed, tol) for t in ts)


def riemannian_metric(cone, omega, u, v, tol=DEFAULT):
    """<Q_{omega^{-1}} u, v> at an interior point omega."""
    if cone.algebra is None:
        raise OracleOnly("the metric needs an algebra-backed cone")
    alg = cone.algebra
    if not interior_member(cone, omega, tol):
        raise NotInterior("metric is defined at interior points only")
    Q = jordan.quad(alg, jordan.inverse(alg, omega, tol))
    return float(np.dot(Q @ as_element(u, cone.dim), as_element(v, cone.dim)))
