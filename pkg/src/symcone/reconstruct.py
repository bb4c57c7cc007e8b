"""Recover a Jordan product from a symmetric cone and its automorphism algebra.

Pipeline: a basis of the Lie algebra g of the automorphism group is split
into skew (k) and symmetric (p) parts; a point omega annihilated by k is
chosen as the identity; the evaluation map X -> X(omega) on p is inverted to
give L with L(x) omega = x; and x o y := L(x) y.
"""
from dataclasses import dataclass, field
from typing import List

import numpy as np

from . import cone as _cone
from . import jordan
from .config import DEFAULT
from .errors import (BracketNotClosed, DegenerateFixedPoint, DimensionMismatch,
                     NotInCone)
from .reports import CheckReport
from .vecspace import as_element, commutator, max_abs, nullspace, span_basis, span_residual


@dataclass
class KPSplit:
    k_basis: List[np.ndarray]
    p_basis: List[np.ndarray]

    @property
    def dim(self):
        return len(self.k_basis) + len(self.p_basis)


@dataclass
class ReconstructionResult:
    omega: np.ndarray
    L: np.ndarray                 # L[i] is the operator L(b_i)
    product_tensor: np.ndarray    # product_tensor[i, j, k] = (b_i o b_j)_k
    phi_condition: float
    report: CheckReport = field(default=None)

    @property
    def dim(self):
        return self.omega.shape[0]

    def lmul(self, x):
        return np.tensordot(as_element(x, self.dim), self.L, axes=1)

    def mul(self, x, y):
        return self.lmul(x) @ as_element(y, self.dim)

    def to_dict(self):
        out = {"identity": self.omega.tolist(),
               "product_tensor": self.product_tensor.tolist(),
               "phi_condition": self.phi_condition}
        if self.report is not None:
            out["report"] = self.report.to_dict()
        return out


def lie_basis_from_algebra(alg, tol=1e-8):
    """Basis of span{L_a} + span{[L_a, L_b]} over basis elements a, b.

    The L_a are symmetric and their commutators skew, so the basis comes out
    adapted to the split: symmetric elements first, then skew ones. For the
    built-in families the span is already a Lie algebra; each bracket of two
    basis elements is checked to lie in it.
    """
    Ls = [jordan.lmul(alg, b) for b in alg.basis()]
    brackets = [commutator(Ls[i], Ls[j]) for i in range(len(Ls)) for j in range(i + 1, len(Ls))]
    basis = span_basis(Ls) + span_basis(brackets)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            C = commutator(basis[i], basis[j])
            if span_residual(C, basis) > tol * (1 + np.linalg.norm(C)):
                raise BracketNotClosed(f"[X_{i}, X_{j}] leaves the span")
    return basis


def split_kp(basis):
    """Skew and symmetric parts of a Lie-algebra basis, each rank-reduced."""
    if len(basis) == 0:
        raise ValueError("empty Lie-algebra basis")
    basis = [np.asarray(X, dtype=float) for X in basis]
    skew = span_basis([(X - X.T) / 2 for X in basis])
    sym = span_basis([(X + X.T) / 2 for X in basis])
    # span_basis returns exact linear combinations, which can leave
    # rounding-level asymmetry; project once more
    return KPSplit([(K - K.T) / 2 for K in skew], [(P + P.T) / 2 for P in sym])


def fixed_space(split, dim):
    """Orthonormal basis (columns) of the common kernel of the k-basis."""
    return nullspace(split.k_basis, dim=dim)


def fixed_point(split, cone, seed, tol=DEFAULT, annihilation_tol=1e-10):
    """Projection of ``seed`` onto the common kernel of k.

    Raises `NotInCone` if the projection is not an interior point.
    """
    seed = as_element(seed, cone.dim)
    N = fixed_space(split, cone.dim)
    omega = N @ (N.T @ seed)
    if not _cone.interior_member(cone, omega, tol):
        raise NotInCone("projection of the seed onto the k-fixed space leaves the cone")
    for K in split.k_basis:
        if np.linalg.norm(K @ omega) > annihilation_tol * max(1.0, np.linalg.norm(omega)):
            raise NotInCone("fixed point is not annihilated by k")
    return omega


def build_product(split, omega, tol=DEFAULT):
    """Invert X -> X(omega) on p and assemble the product tensor."""
    omega = as_element(omega)
    d = omega.shape[0]
    p = len(split.p_basis)
    if p != d:
        raise DimensionMismatch(f"dim p = {p} but the space has dimension {d}")
    Phi = np.column_stack([X @ omega for X in split.p_basis])
    cond = float(np.linalg.cond(Phi))
    if not np.isfinite(cond) or cond > tol.phi_condition:
        raise DegenerateFixedPoint(f"evaluation map is ill-conditioned (cond {cond:.3e})")
    C = np.linalg.solve(Phi, np.eye(d))          # column j: coefficients of L(b_j)
    P = np.array(split.p_basis)
    L = np.einsum("ij,ikl->jkl", C, P)
    L = (L + L.transpose(0, 2, 1)) / 2
    tensor = np.einsum("ikj->ijk", L)            # (b_i o b_j)_k = L(b_i)[k, j]
    return ReconstructionResult(omega, L, tensor, cond)


def reconstruct_cone(cone, seed=None, basis=None, tol=DEFAULT):
    """Run the full pipeline on an algebra-backed or Lie-basis-carrying cone."""
    if basis is None:
        basis = cone.lie_basis
    if basis is None:
        if cone.algebra is None:
            raise ValueError("cone has neither a Lie basis nor a backing algebra")
        basis = lie_basis_from_algebra(cone.algebra)
    split = split_kp(basis)
    if seed is None:
        seed = _cone.reference_point(cone)
    omega = fixed_point(split, cone, seed, tol)
    return build_product(split, omega, tol)


def certify(result, cone, trials=200, tol=1e-8, rng_seed=0, ambiguous=1e-7):
    """Sampled certification that the reconstructed product is a unital JH-algebra for the cone.

    Checks commutativity, the Jordan identity (relative), associativity of
    the dot product, the unit law for omega, that squares land in the
    closed cone, and that the input cone agrees with positive-definiteness
    of the new multiplication operators. Samples whose smallest eigenvalue is
    within ``ambiguous`` of zero are skipped in the membership comparison.
    """
    rng = np.random.default_rng(rng_seed)
    d = result.dim
    m = result.mul
    omega = result.omega
    worst = dict.fromkeys(["commutativity", "jordan_identity", "inner_associativity",
                           "unit_law", "squares_in_closure", "membership_agreement"], 0.0)
    witness = None
    for _ in range(trials):
        a, b, c = rng.standard_normal((3, d))
        a2 = m(a, a)
        scale = np.linalg.norm(a) ** 3 * np.linalg.norm(b) or 1.0
        worst["commutativity"] = max(worst["commutativity"], max_abs(m(a, b) - m(b, a)))
        worst["jordan_identity"] = max(worst["jordan_identity"],
                                       max_abs(m(a, m(b, a2)) - m(m(a, b), a2)) / scale)
        worst["inner_associativity"] = max(worst["inner_associativity"],
                                           abs(np.dot(m(a, b), c) - np.dot(b, m(a, c))))
        worst["unit_law"] = max(worst["unit_law"], max_abs(m(omega, a) - a))
        if not _cone.closure_member(cone, a2 / np.linalg.norm(a2)):
            worst["squares_in_closure"] = 1.0
            witness = a

    # membership agreement, sampled on both sides of the boundary
    inside = _cone.sample_interior(cone, rng, trials, shift=1e-2)
    outside = rng.standard_normal((trials, d))
    n_in = n_out = 0
    for x in np.vstack([inside, outside]):
        x = x / np.linalg.norm(x)
        lam = np.linalg.eigvalsh(result.lmul(x))[0]
        if abs(lam) < ambiguous:
            continue
        ours = lam > 0
        n_in += ours
        n_out += not ours
        if ours != _cone.interior_member(cone, x):
            worst["membership_agreement"] = 1.0
            witness = x
    checks = {k: v <= tol for k, v in worst.items()}
    return CheckReport("certification", all(checks.values()), float(max(worst.values())),
                       witness, {"residuals": worst, "checks": checks, "trials": trials,
                                 "interior_samples": int(n_in), "exterior_samples": int(n_out)})
