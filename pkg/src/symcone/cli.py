"""Command-line front end.

Exit codes: 0 pass, 1 property or certification failure, 2 usage or parse
error.
"""
import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import cone as _cone
from . import jordan, orderunit, reconstruct, sampling
from .errors import (DegenerateFixedPoint, DimensionMismatch, InvalidDescriptor, NotInCone,
                     SymConeError)
from .io import cone_from_json, cone_to_json, descriptor_to_json, dump_json, load_json

PROPERTIES = ("self-duality", "order-unit", "isometry", "sandwich", "positive-map")

FIXTURES = {
    "orthant2": jordan.Orthant(2),
    "orthant4": jordan.Orthant(4),
    "spin3": jordan.Spin(3),
    "spin5": jordan.Spin(5),
    "sym2": jordan.SymMatrices(2),
    "sym3": jordan.SymMatrices(3),
    "spin3+spin3": jordan.DirectSum((jordan.Spin(3), jordan.Spin(3))),
    "spin3+spin4": jordan.DirectSum((jordan.Spin(3), jordan.Spin(4))),
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    spec: Optional[str] = None
    cone: Optional[str] = None
    seed_point: Optional[str] = None
    point: Optional[str] = None
    trials: int = 1000
    tol: float = 1e-9
    rng_seed: int = 0
    out: Optional[str] = None
    property: Optional[list] = None

    def __post_init__(self):
        if self.trials < 1:
            raise UsageError("--trials must be >= 1")
        if not self.tol > 0:
            raise UsageError("--tol must be positive")


def parse_point(text, dim):
    try:
        vals = json.loads(text) if text.strip().startswith("[") else [float(t) for t in text.split(",")]
        x = np.asarray(vals, dtype=float)
    except (ValueError, json.JSONDecodeError):
        raise UsageError(f"cannot parse point {text!r}") from None
    if x.shape != (dim,):
        raise UsageError(f"point has {x.size} coordinates, expected {dim}")
    return x


def _load_cone(cfg):
    path = cfg.cone or cfg.spec
    if path is None:
        raise UsageError("one of --spec or --cone is required")
    try:
        return cone_from_json(load_json(path))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except InvalidDescriptor as exc:
        raise UsageError(str(exc)) from None


def _context(cfg, cone):
    unit = None if cfg.seed_point is None else parse_point(cfg.seed_point, cone.dim)
    try:
        return orderunit.make_context(cone, unit)
    except SymConeError as exc:
        raise UsageError(str(exc)) from None


def cmd_verify(cfg):
    cone = _load_cone(cfg)
    report = jordan.verify_axioms(cone.algebra, cfg.trials, cfg.tol, cfg.rng_seed)
    dump_json(report.to_dict(), cfg.out)
    return 0 if report.passed else 1


def _check_one(name, cfg, cone, rng):
    ctx = _context(cfg, cone)
    trials = cfg.trials
    if name == "self-duality":
        return _cone.self_duality_check(cone, trials, cfg.rng_seed).to_dict()
    if name == "order-unit":
        b = orderunit.norm_equiv_bounds(ctx, rng_seed=cfg.rng_seed)
        V = rng.standard_normal((trials, cone.dim))
        ratio = orderunit.order_unit_norms(ctx, V) / np.linalg.norm(V, axis=1)
        low = float(np.max(b.alpha - ratio))
        high = float(np.max(ratio - b.beta))
        ok = low <= cfg.tol and high <= cfg.tol
        return {"property": name, "pass": ok, "max_residual": max(low, high, 0.0), **b.to_dict()}
    if cone.algebra is None:
        raise UsageError(f"property {name!r} needs an algebra-backed cone")
    if name == "isometry":
        n = max(1, min(trials, 20))
        ks = sampling.sample_k_elements(cone, rng, n)
        gs = [g for g in sampling.sample_automorphisms(cone, rng, n)
              if np.linalg.norm(g @ ctx.unit - ctx.unit) > 1e-6]
        k_reports = [orderunit.isometry_criterion(ctx, g, 50, cfg.rng_seed) for g in ks]
        g_reports = [orderunit.isometry_criterion(ctx, g, 50, cfg.rng_seed) for g in gs]
        fixes = [r.fixes_unit for r in k_reports]
        ok = (all(r.consistent for r in k_reports + g_reports)
              and all(fixes) == all(np.allclose(g @ ctx.unit, ctx.unit, atol=cfg.tol) for g in ks)
              and not any(r.fixes_unit for r in g_reports))
        witness = next((r.witness for r in g_reports if r.witness is not None), None)
        return {"property": name, "pass": bool(ok),
                "max_residual": max([r.max_norm_deviation for r in k_reports] + [0.0]),
                "k_elements": len(ks), "k_fixing_unit": int(sum(fixes)),
                "non_isometries": len(gs),
                **({"witness": witness.tolist()} if witness is not None else {})}
    if name == "sandwich":
        b = orderunit.norm_equiv_bounds(ctx, rng_seed=cfg.rng_seed)
        reps = [orderunit.sandwich_check(ctx, g, b)
                for g in sampling.sample_k_elements(cone, rng, min(trials, 200))]
        bad = next((r for r in reps if not r.passed), None)
        return {"property": name, "pass": bad is None,
                "max_residual": max(r.max_residual for r in reps),
                "samples": len(reps), **b.to_dict(),
                **({"witness": bad.witness.tolist()} if bad is not None else {})}
    if name == "positive-map":
        reps = [orderunit.positive_map_norm(ctx, T, min(trials, 200), cfg.rng_seed, cfg.tol)[1]
                for T in sampling.sample_positive_maps(cone, rng, 10)]
        return {"property": name, "pass": all(r.passed for r in reps),
                "max_residual": max(r.max_residual for r in reps), "maps": len(reps)}
    raise UsageError(f"unknown property {name!r}")


def cmd_check(cfg):
    props = cfg.property or ["self-duality"]
    unknown = [p for p in props if p not in PROPERTIES]
    if unknown:
        raise UsageError(f"unknown property {unknown[0]!r}; choose from {', '.join(PROPERTIES)}")
    cone = _load_cone(cfg)
    rng = np.random.default_rng(cfg.rng_seed)
    reports = [_check_one(p, cfg, cone, rng) for p in props]
    dump_json(reports if len(reports) > 1 else reports[0], cfg.out)
    return 0 if all(r["pass"] for r in reports) else 1


def cmd_norm(cfg):
    cone = _load_cone(cfg)
    if cfg.point is None:
        raise UsageError("--point is required")
    ctx = _context(cfg, cone)
    x = parse_point(cfg.point, cone.dim)
    value = orderunit.order_unit_norm(ctx, x)
    x1, x2 = orderunit.decompose_positive(ctx, x)
    dump_json({"point": x.tolist(), "unit": ctx.unit.tolist(), "order_unit_norm": value,
               "positive_part": x1.tolist(), "negative_part": x2.tolist()}, cfg.out)
    return 0


def cmd_reconstruct(cfg):
    cone = _load_cone(cfg)
    seed = None if cfg.seed_point is None else parse_point(cfg.seed_point, cone.dim)
    try:
        result = reconstruct.reconstruct_cone(cone, seed)
    except (DimensionMismatch, NotInCone, DegenerateFixedPoint) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    trials = min(cfg.trials, 500)
    result.report = reconstruct.certify(result, cone, trials, max(cfg.tol, 1e-8), cfg.rng_seed)
    dump_json(result.to_dict(), cfg.out)
    return 0 if result.report.passed else 1


def cmd_lie_basis(cfg):
    cone = _load_cone(cfg)
    basis = sampling.lie_basis(cone)
    dump_json(cone_to_json(cone.with_lie_basis(basis)), cfg.out)
    return 0


def cmd_generate(cfg):
    out = cfg.out or "fixtures"
    os.makedirs(out, exist_ok=True)
    for name, desc in FIXTURES.items():
        dump_json(descriptor_to_json(desc), os.path.join(out, f"{name}.json"))
        cone = _cone.cone_from_algebra(jordan.make_algebra(desc))
        cone = cone.with_lie_basis(reconstruct.lie_basis_from_algebra(cone.algebra))
        dump_json(cone_to_json(cone), os.path.join(out, f"{name}.cone.json"))
    print(f"wrote {2 * len(FIXTURES)} fixtures to {out}")
    return 0


COMMANDS = {
    "verify": cmd_verify,
    "check": cmd_check,
    "norm": cmd_norm,
    "reconstruct": cmd_reconstruct,
    "lie-basis": cmd_lie_basis,
    "generate": cmd_generate,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="symcone", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--spec", help="algebra descriptor or cone JSON")
        p.add_argument("--cone", help="cone JSON (with optional lie_basis)")
        p.add_argument("--seed-point", help="seed for omega, or order unit for check/norm")
        p.add_argument("--point", help="point for the norm command")
        p.add_argument("--trials", type=int, default=1000)
        p.add_argument("--tol", type=float, default=1e-9)
        p.add_argument("--rng-seed", type=int, default=0)
        p.add_argument("--out", help="output path (directory for generate)")
        p.add_argument("--property", action="append")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(**vars(args))
        return COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
