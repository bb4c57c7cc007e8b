"""Numerical tolerances shared across the package."""
from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    symmetry: float = 1e-10        # max |A - A^T| accepted by sym_eig
    rank: float = 1e-8             # relative singular-value cutoff
    interior: float = 1e-9         # min eig of L_x must exceed this
    closure: float = 1e-9          # min eig of L_x may dip to -closure
    invertible: float = 1e-10      # relative smallest singular value of Q_a
    bisection: float = 1e-10       # bracket width for order-unit norms
    phi_condition: float = 1e8     # max condition number of the evaluation map
    newton_steps: int = 100
    newton_residual: float = 1e-12


DEFAULT = Tolerances()
