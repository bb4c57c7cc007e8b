"""Euclidean Jordan algebras, symmetric cones, and recovery of the Jordan
product from a cone's automorphism Lie algebra."""
from .cone import ConeSpec, cone_from_algebra, cone_from_oracle
from .jordan import DirectSum, JordanAlgebra, Orthant, Spin, SymMatrices, make_algebra
from .orderunit import OrderUnitContext, make_context
from .reconstruct import ReconstructionResult, certify, reconstruct_cone

__all__ = [
    "ConeSpec", "cone_from_algebra", "cone_from_oracle",
    "DirectSum", "JordanAlgebra", "Orthant", "Spin", "SymMatrices", "make_algebra",
    "OrderUnitContext", "make_context",
    "ReconstructionResult", "certify", "reconstruct_cone",
]
