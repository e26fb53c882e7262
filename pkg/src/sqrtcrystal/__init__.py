"""Square-root crystals, Hecke insertion and Grothendieck polynomial tools."""

from .algebra import Permutation, bruhat_leq, hecke_product
from .crystals import Crystal, rect, standard_gl, standard_sqrt, tensor
from .errors import (
    ConsistencyError,
    CrystalError,
    IncompatibleSequenceError,
    InvalidShapeError,
    SizeGuardError,
    SqrtCrystalError,
)
from .polynomial import Expansion, Polynomial

__version__ = "0.1.0"

__all__ = [
    "Permutation", "bruhat_leq", "hecke_product",
    "Crystal", "rect", "standard_gl", "standard_sqrt", "tensor",
    "ConsistencyError", "CrystalError", "IncompatibleSequenceError", "InvalidShapeError",
    "SizeGuardError", "SqrtCrystalError",
    "Expansion", "Polynomial",
]
