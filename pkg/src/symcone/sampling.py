"""Random automorphisms, orthogonal automorphisms and positive maps."""
import numpy as np

from . import jordan
from .jordan import Orthant
from .reconstruct import lie_basis_from_algebra, split_kp
from .vecspace import expm


def lie_basis(cone):
    if cone.lie_basis is not None:
        return list(cone.lie_basis)
    return lie_basis_from_algebra(cone.algebra)


def sample_k_elements(cone, rng, n, scale=1.0):
    """Orthogonal automorphisms exp(sum c_i K_i) for K_i spanning k.

    The identity component only, except for the orthant where random
    coordinate permutations are mixed in.
    """
    k_basis = split_kp(lie_basis(cone)).k_basis
    d = cone.dim
    out = []
    for i in range(n):
        if k_basis:
            X = sum(c * K for c, K in zip(scale * rng.standard_normal(len(k_basis)), k_basis))
            g = expm(X, symmetric=False)
        else:
            g = np.eye(d)
        if cone.algebra is not None and isinstance(cone.algebra.descriptor, Orthant) and i % 2:
            g = np.eye(d)[rng.permutation(d)] @ g
        out.append(g)
    return out


def sample_positive_maps(cone, rng, n):
    """Quadratic representations Q_a of interior a and convex combinations of pairs."""
    alg = cone.algebra
    Qs = [jordan.quad(alg, jordan.random_interior(alg, rng)) for _ in range(n)]
    out = []
    for i in range(n):
        if i % 2:
            t = rng.uniform()
            out.append(t * Qs[i] + (1 - t) * Qs[i - 1])
        else:
            out.append(Qs[i])
    return out


def sample_automorphisms(cone, rng, n):
    """Q_a for interior a, composed with an orthogonal automorphism."""
    alg = cone.algebra
    ks = sample_k_elements(cone, rng, n)
    return [jordan.quad(alg, jordan.random_interior(alg, rng)) @ k for k in ks]
