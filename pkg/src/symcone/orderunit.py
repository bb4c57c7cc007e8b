"""Order-unit calculus for the ordering induced by a closed cone.

x <= y means y - x lies in the closure of the cone; an interior point e is
an order unit and defines the norm ||x||_e = inf{lam > 0 : -lam e <= x <= lam e}.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import cone as _cone
from .config import DEFAULT
from .errors import DegenerateUnit, NotAutomorphism, NotInterior, PositivityViolated
from .reports import CheckReport
from .vecspace import as_element, as_operator


@dataclass(frozen=True, eq=False)
class OrderUnitContext:
    cone: _cone.ConeSpec
    unit: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "unit", as_element(self.unit, self.cone.dim))
        if not _cone.interior_member(self.cone, self.unit):
            raise NotInterior("order unit must be an interior point of the cone")


def make_context(cone, unit=None):
    return OrderUnitContext(cone, _cone.reference_point(cone) if unit is None else unit)


@dataclass(frozen=True)
class NormEquivBounds:
    alpha: float
    beta: float
    radius: float
    beta_raised: bool = False

    def to_dict(self):
        return {"alpha": self.alpha, "beta": self.beta, "radius": self.radius,
                "beta_raised": self.beta_raised}


def order_leq(ctx, x, y):
    return _cone.closure_member(ctx.cone, as_element(y) - as_element(x))


# --- the order-unit norm --------------------------------------------------

def _within(ctx, X, lam):
    """Rows i with -lam_i e <= x_i <= lam_i e, with no membership slack."""
    e = ctx.unit
    if ctx.cone.algebra is not None:
        up = lam[:, None] * e - X
        down = lam[:, None] * e + X
        return (_cone.closure_member_batch(ctx.cone, up, slack=0.0)
                & _cone.closure_member_batch(ctx.cone, down, slack=0.0))
    return np.array([_cone.closure_member(ctx.cone, l * e - x)
                     and _cone.closure_member(ctx.cone, l * e + x) for x, l in zip(X, lam)])


def order_unit_norms(ctx, X, tol=DEFAULT.bisection):
    """Order-unit norms of the rows of ``X`` by bisection on lam.

    The bracket starts at [0, 1] and its upper end doubles until the
    sandwich holds; the returned value is the upper end, so
    -(||x||_e) e <= x <= (||x||_e) e holds exactly and the result exceeds
    the true norm by at most ``tol``.
    """
    X = np.atleast_2d(np.asarray(X, dtype=float))
    n = X.shape[0]
    lo, hi = np.zeros(n), np.ones(n)
    grow = ~_within(ctx, X, hi)
    while grow.any():
        lo[grow] = hi[grow]
        hi[grow] *= 2
        grow[grow] = ~_within(ctx, X[grow], hi[grow])
    active = hi - lo > tol
    while active.any():
        mid = (lo[active] + hi[active]) / 2
        ok = _within(ctx, X[active], mid)
        idx = np.flatnonzero(active)
        hi[idx[ok]] = mid[ok]
        lo[idx[~ok]] = mid[~ok]
        active = hi - lo > tol
    return hi


def order_unit_norm(ctx, x, tol=DEFAULT.bisection):
    return float(order_unit_norms(ctx, as_element(x, ctx.cone.dim)[None], tol)[0])


def decompose_positive(ctx, x, tol=DEFAULT.bisection):
    """x = x1 - x2 with x1 = (lam e + x)/2 and x2 = (lam e - x)/2 both positive."""
    x = as_element(x, ctx.cone.dim)
    lam = order_unit_norm(ctx, x, tol) + tol
    x1 = (lam * ctx.unit + x) / 2
    x2 = (lam * ctx.unit - x) / 2
    return x1, x2


# --- positive maps --------------------------------------------------------

def positivity_violation(cone, T, samples, rel_slack=DEFAULT.closure):
    """First sample x in the closure whose image T x leaves the closure."""
    Z = samples @ T.T
    scale = np.maximum(np.linalg.norm(Z, axis=1), 1e-300)
    ok = _cone.closure_member_batch(cone, Z / scale[:, None], slack=rel_slack)
    return None if ok.all() else samples[int(np.argmin(ok))]


def sample_order_interval(ctx, rng, n):
    """Points of [-e, e]: random directions scaled to order-unit norm |u| <= 1."""
    Y = rng.standard_normal((n, ctx.cone.dim))
    Y = Y / order_unit_norms(ctx, Y)[:, None]
    u = rng.uniform(-1, 1, n)
    u[: n // 10] = np.sign(u[: n // 10])  # some samples on the unit sphere
    return Y * u[:, None]


def positive_map_norm(ctx, T, trials=500, rng_seed=0, tol=1e-9):
    """Norm of a positive map as ||T(e)||_e, with a sampled sup check.

    Returns ``(value, report)``; the report compares ``value`` against the
    sampled sup of ||T x||_e over the order interval [-e, e].
    """
    T = as_operator(T, ctx.cone.dim)
    rng = np.random.default_rng(rng_seed)
    closure = _cone.sample_closure(ctx.cone, rng, trials)
    bad = positivity_violation(ctx.cone, T, closure)
    if bad is not None:
        raise PositivityViolated("map sends a cone element outside the cone", bad)
    value = order_unit_norm(ctx, T @ ctx.unit)
    X = sample_order_interval(ctx, rng, trials)
    norms = order_unit_norms(ctx, X @ T.T)
    excess = norms - value
    i = int(np.argmax(excess))
    passed = bool(excess[i] <= tol)
    return value, CheckReport(
        "positive-map-norm", passed, float(max(excess[i], 0.0)),
        None if passed else X[i],
        {"norm": value, "sampled_sup": float(norms.max()), "trials": trials},
    )


@dataclass
class IsometryReport:
    fixes_unit: bool
    norm_preserved: bool
    unit_residual: float
    max_norm_deviation: float
    witness: Optional[np.ndarray] = None

    @property
    def consistent(self):
        return self.fixes_unit == self.norm_preserved

    def __bool__(self):
        return self.fixes_unit

    def to_dict(self):
        out = {"property": "isometry", "pass": self.consistent, "fixes_unit": self.fixes_unit,
               "norm_preserved": self.norm_preserved, "unit_residual": self.unit_residual,
               "max_residual": self.max_norm_deviation}
        if self.witness is not None:
            out["witness"] = self.witness.tolist()
        return out


def isometry_criterion(ctx, g, trials=200, rng_seed=0, tol=1e-9, norm_tol=1e-8):
    """Decide whether an automorphism g is an order-unit isometry via g(e) = e.

    The report also records whether ||g x||_e = ||x||_e on samples, so the
    two sides of the equivalence can be compared; on a mismatch ``witness``
    is the sample with the largest deviation.
    """
    g = as_operator(g, ctx.cone.dim)
    rng = np.random.default_rng(rng_seed)
    closure = _cone.sample_closure(ctx.cone, rng, trials)
    try:
        ginv = np.linalg.inv(g)
    except np.linalg.LinAlgError:
        raise NotAutomorphism("operator is singular") from None
    for h in (g, ginv):
        bad = positivity_violation(ctx.cone, h, closure)
        if bad is not None:
            raise NotAutomorphism("operator or its inverse is not positive", bad)
    e = ctx.unit
    unit_res = float(np.linalg.norm(g @ e - e))
    X = np.vstack([e, ginv @ e, rng.standard_normal((trials, ctx.cone.dim))])
    dev = np.abs(order_unit_norms(ctx, X @ g.T) - order_unit_norms(ctx, X))
    i = int(np.argmax(dev))
    preserved = bool(dev[i] <= norm_tol)
    return IsometryReport(unit_res <= tol, preserved, unit_res, float(dev[i]),
                          None if preserved else X[i])


# --- norm equivalence -----------------------------------------------------

def _boundary_distance(ctx, z, cap=1e8, steps=80):
    """sup{t : e + t z in the closed cone}, inf when the ray never exits."""
    e = ctx.unit

    def inside(t):
        p = e + t * z
        if ctx.cone.algebra is not None:
            return _cone.closure_member(ctx.cone, p, slack=0.0)
        return bool(ctx.cone.oracle(p))

    hi = 1.0
    while inside(hi):
        hi *= 2
        if hi > cap:
            return np.inf
    lo = 0.0
    for _ in range(steps):
        mid = (lo + hi) / 2
        if inside(mid):
            lo = mid
        else:
            hi = mid
    return lo


def norm_equiv_bounds(ctx, directions=64, samples=200, rng_seed=0):
    """Constants with alpha ||v|| <= ||v||_e <= beta ||v||.

    alpha = <e,e>^(-1/2); beta = 2/r with r the radius of a ball about e
    inside the cone, estimated as the smallest boundary distance over the
    signed coordinate directions and ``directions`` random unit directions.
    If a sample still violates the upper bound, beta is raised to cover it
    and ``beta_raised`` is set.
    """
    directions = max(32, directions)
    rng = np.random.default_rng(rng_seed)
    d = ctx.cone.dim
    Z = rng.standard_normal((directions, d))
    Z = np.vstack([np.eye(d), -np.eye(d), Z / np.linalg.norm(Z, axis=1, keepdims=True)])
    r = min(_boundary_distance(ctx, z) for z in Z)
    if not np.isfinite(r) or r < 1e-12:
        raise DegenerateUnit(f"ball radius about the unit collapsed to {r}")
    alpha = float(np.dot(ctx.unit, ctx.unit) ** -0.5)
    beta = 2.0 / r
    V = rng.standard_normal((samples, d))
    ratio = order_unit_norms(ctx, V) / np.linalg.norm(V, axis=1)
    raised = bool(ratio.max() > beta)
    if raised:
        beta = float(ratio.max() * (1 + 1e-9))
    return NormEquivBounds(alpha, beta, float(r), raised)


def sandwich_check(ctx, g, bounds, slack=DEFAULT.closure):
    """(alpha/beta) e <= g(e) <= (beta/alpha) e in the closure ordering."""
    e = ctx.unit
    ge = as_operator(g, ctx.cone.dim) @ e
    c = bounds.alpha / bounds.beta
    low = ge - c * e
    high = e / c - ge
    ok = (_cone.closure_member(ctx.cone, low, slack=slack)
          and _cone.closure_member(ctx.cone, high, slack=slack))
    margin = 0.0
    if ctx.cone.algebra is not None:
        margin = float(min(_cone.min_eigs(ctx.cone, np.vstack([low, high]))))
    return CheckReport("sandwich", ok, max(0.0, -margin), None if ok else ge,
                       {"ratio": c, "min_margin": margin})
