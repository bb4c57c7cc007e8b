"""JSON formats for descriptors, cones and reconstructed algebras.

Vectors are JSON arrays, matrices row-major arrays of arrays. Floats are
written with Python's shortest round-trip repr, so a write/read cycle is
bit-faithful.
"""
import json

import numpy as np

from .cone import cone_from_algebra
from .errors import InvalidDescriptor
from .jordan import DirectSum, Orthant, Spin, SymMatrices, make_algebra


def descriptor_to_json(desc):
    if isinstance(desc, Orthant):
        return {"type": "orthant", "n": desc.n}
    if isinstance(desc, Spin):
        return {"type": "spin", "n": desc.n}
    if isinstance(desc, SymMatrices):
        return {"type": "sym", "k": desc.k}
    if isinstance(desc, DirectSum):
        return {"type": "direct_sum", "parts": [descriptor_to_json(p) for p in desc.parts]}
    raise InvalidDescriptor(f"not a descriptor: {desc!r}")


def _int(obj, key):
    v = obj.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise InvalidDescriptor(f"field {key!r} must be an integer, got {v!r}")
    return v


def descriptor_from_json(obj):
    if not isinstance(obj, dict) or "type" not in obj:
        raise InvalidDescriptor(f"descriptor must be an object with a 'type': {obj!r}")
    kind = obj["type"]
    if kind == "orthant":
        return Orthant(_int(obj, "n"))
    if kind == "spin":
        return Spin(_int(obj, "n"))
    if kind == "sym":
        return SymMatrices(_int(obj, "k"))
    if kind == "direct_sum":
        parts = obj.get("parts")
        if not isinstance(parts, list):
            raise InvalidDescriptor("direct_sum needs a list of parts")
        return DirectSum(tuple(descriptor_from_json(p) for p in parts))
    raise InvalidDescriptor(f"unknown algebra type {kind!r}")


def cone_to_json(cone):
    if cone.algebra is None:
        raise InvalidDescriptor("only algebra-backed cones are serializable")
    out = {"dim": cone.dim, "backing": {"algebra": descriptor_to_json(cone.algebra.descriptor)}}
    if cone.lie_basis is not None:
        out["lie_basis"] = [np.asarray(X).tolist() for X in cone.lie_basis]
    return out


def cone_from_json(obj):
    """Cone JSON, or a bare descriptor (which yields its algebra cone)."""
    if isinstance(obj, dict) and "type" in obj:
        return cone_from_algebra(make_algebra(descriptor_from_json(obj)))
    try:
        desc = descriptor_from_json(obj["backing"]["algebra"])
    except (KeyError, TypeError):
        raise InvalidDescriptor("cone JSON needs backing.algebra") from None
    alg = make_algebra(desc)
    if obj.get("dim", alg.dim) != alg.dim:
        raise InvalidDescriptor(f"dim {obj['dim']} does not match the algebra ({alg.dim})")
    basis = obj.get("lie_basis")
    if basis is not None:
        basis = [np.asarray(X, dtype=float) for X in basis]
        if any(X.shape != (alg.dim, alg.dim) for X in basis):
            raise InvalidDescriptor("lie_basis matrices must be dim x dim")
    return cone_from_algebra(alg, basis)


def load_json(path):
    with open(path) as f:
        return json.load(f)


def dump_json(obj, path=None):
    text = json.dumps(obj, indent=2)
    if path is None:
        print(text)
    else:
        with open(path, "w") as f:
            f.write(text + "\n")
    return text
