"""Reconstruct each built-in family from its cone and Lie algebra and tabulate the errors."""
import argparse
import time

import numpy as np

from symcone import jordan, reconstruct
from symcone.cone import cone_from_algebra

FAMILIES = [
    jordan.Orthant(4),
    jordan.Spin(3),
    jordan.Spin(5),
    jordan.SymMatrices(2),
    jordan.SymMatrices(3),
    jordan.DirectSum((jordan.Spin(3), jordan.Spin(3))),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=200)
    args = parser.parse_args()
    print(f"{'family':<14}{'dim':>4}{'dim k':>7}{'dim p':>7}{'cond':>10}{'max err':>11}{'cert':>6}{'secs':>7}")
    for desc in FAMILIES:
        alg = jordan.make_algebra(desc)
        t0 = time.perf_counter()
        basis = reconstruct.lie_basis_from_algebra(alg)
        cone = cone_from_algebra(alg, basis)
        split = reconstruct.split_kp(basis)
        res = reconstruct.reconstruct_cone(cone, seed=alg.identity)
        rep = reconstruct.certify(res, cone, trials=args.trials)
        secs = time.perf_counter() - t0
        err = np.max(np.abs(res.product_tensor - alg.tensor))
        print(f"{desc.name:<14}{alg.dim:>4}{len(split.k_basis):>7}{len(split.p_basis):>7}"
              f"{res.phi_condition:>10.2f}{err:>11.2e}{'ok' if rep.passed else 'FAIL':>6}{secs:>7.2f}")


if __name__ == "__main__":
    main()
