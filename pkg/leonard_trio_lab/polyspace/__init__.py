"""
The polynomial space C_N[x]: polynomials, exact matrices, operators, bases
and band-structure classification.
"""

from .basis import BasisFamily, BasisKind, change_of_basis, matrix_in_basis
from .matrix import Matrix
from .operator import (
    BracketMode,
    Operator,
    anticommutator,
    apply,
    bracket,
    commutator,
)
from .poly import Poly, poch_poly
from .structure import (
    StructureClass,
    StructureTag,
    classify,
    is_irreducible_tridiagonal,
)

__all__ = [
    "BasisFamily",
    "BasisKind",
    "change_of_basis",
    "matrix_in_basis",
    "Matrix",
    "BracketMode",
    "Operator",
    "anticommutator",
    "apply",
    "bracket",
    "commutator",
    "Poly",
    "poch_poly",
    "StructureClass",
    "StructureTag",
    "classify",
    "is_irreducible_tridiagonal",
]
