"""Exact verification engine for bialgebras in braided monoidal categories."""

from .category import (CatObject, FiniteGroup, Morphism, SignGradedBackend,
                       SuperVecBackend, SUPER, VEC, VecBackend,
                       YetterDrinfeldBackend)
from .hopf import BraidedBialgebra, Coalgebra, HopfAlgebra, Integral
from .linalg import Matrix, Scalar

__all__ = [
    "BraidedBialgebra", "CatObject", "Coalgebra", "FiniteGroup", "HopfAlgebra",
    "Integral", "Matrix", "Morphism", "Scalar", "SignGradedBackend", "SUPER",
    "SuperVecBackend", "VEC", "VecBackend", "YetterDrinfeldBackend",
]
