"""Norm-equivalence constants and the K-orbit sandwich at random order units."""
import argparse

import numpy as np

from symcone import jordan, orderunit, sampling
from symcone.cone import cone_from_algebra

FAMILIES = [jordan.Orthant(4), jordan.Spin(5), jordan.SymMatrices(3),
            jordan.DirectSum((jordan.Spin(3), jordan.Spin(3)))]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--units", type=int, default=3)
    parser.add_argument("--samples", type=int, default=100)
    parser.add_argument("--rng-seed", type=int, default=0)
    args = parser.parse_args()
    rng = np.random.default_rng(args.rng_seed)
    print(f"{'family':<14}{'alpha':>9}{'beta':>9}{'radius':>9}{'raised':>8}{'min margin':>12}{'pass':>6}")
    for desc in FAMILIES:
        cone = cone_from_algebra(jordan.make_algebra(desc))
        for _ in range(args.units):
            ctx = orderunit.make_context(cone, jordan.random_interior(cone.algebra, rng, shift=0.5))
            b = orderunit.norm_equiv_bounds(ctx, rng_seed=args.rng_seed)
            reps = [orderunit.sandwich_check(ctx, g, b)
                    for g in sampling.sample_k_elements(cone, rng, args.samples)]
            margin = min(r.details["min_margin"] for r in reps)
            print(f"{desc.name:<14}{b.alpha:>9.4f}{b.beta:>9.3f}{b.radius:>9.4f}"
                  f"{str(b.beta_raised):>8}{margin:>12.2e}{str(all(r.passed for r in reps)):>6}")


if __name__ == "__main__":
    main()
