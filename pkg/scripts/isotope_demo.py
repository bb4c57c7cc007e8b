"""Isotopes: reconstruct with identities other than the original one.

For each seed the k-fixed projection omega becomes the new identity; the
resulting product has the same cone of squares but a different unit.
"""
import numpy as np

from symcone import jordan, reconstruct
from symcone.cone import cone_from_algebra, interior_member

np.set_printoptions(precision=4, suppress=True)


def show(desc, seeds):
    alg = jordan.make_algebra(desc)
    cone = cone_from_algebra(alg, reconstruct.lie_basis_from_algebra(alg))
    for seed in seeds:
        res = reconstruct.reconstruct_cone(cone, seed=np.asarray(seed, dtype=float))
        rep = reconstruct.certify(res, cone, trials=100)
        print(f"{desc.name}  seed {np.asarray(seed)}  omega {res.omega}  "
              f"certified {rep.passed}  omega interior {interior_member(cone, res.omega)}")
        print(f"  omega o omega = {res.mul(res.omega, res.omega)}")


def main():
    show(jordan.Orthant(2), [[1, 1], [2, 1], [0.5, 3]])
    show(jordan.Spin(3), [[0, 0, 1], [0.3, -0.2, 2.0]])
    show(jordan.DirectSum((jordan.Spin(3), jordan.Spin(3))), [[0.1, 0, 1, 0, 0.2, 3]])


if __name__ == "__main__":
    main()
