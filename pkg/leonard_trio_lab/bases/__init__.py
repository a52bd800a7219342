"""
The distinguished bases of the standard realization, their eigenvalue and
band-action checks, and the Leonard trio and pair verdicts.
"""

from .context import BasisContext
from .eigen import (
    BidiagonalData,
    EigenData,
    TridiagFamily,
    bidiagonal_check,
    eigen_check,
    expected_eigenvalues,
    tridiag_closed_form,
    tridiag_coeff_check,
)
from .families import build_basis
from .leonard import TrioVerdict, trio_verdict

__all__ = [
    "BasisContext",
    "BidiagonalData",
    "EigenData",
    "TridiagFamily",
    "bidiagonal_check",
    "eigen_check",
    "expected_eigenvalues",
    "tridiag_closed_form",
    "tridiag_coeff_check",
    "build_basis",
    "TrioVerdict",
    "trio_verdict",
]
