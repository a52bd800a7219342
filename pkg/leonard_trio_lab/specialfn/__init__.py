"""
Hahn polynomials and Hahn rational functions as connection coefficients
between the distinguished bases.
"""

from .bispectral import BispectralSide, bispectral_consistency
from .connection import ConnectionKind, closed_form_connection, connection_matrix
from .hahn import (
    HahnParams,
    check_cleared_numerator,
    cleared_numerator,
    finite_difference,
    hahn_Q,
    rational_U,
)
from .orthogonality import (
    BiorthoData,
    OrthoData,
    biortho_data,
    biorthogonality_check,
    hahn_norm,
    hahn_weight,
    ortho_data,
    orthogonality_all,
    orthogonality_check,
)

__all__ = [
    "BispectralSide",
    "bispectral_consistency",
    "ConnectionKind",
    "closed_form_connection",
    "connection_matrix",
    "HahnParams",
    "check_cleared_numerator",
    "cleared_numerator",
    "finite_difference",
    "hahn_Q",
    "rational_U",
    "BiorthoData",
    "biortho_data",
    "biorthogonality_check",
    "hahn_norm",
    "hahn_weight",
    "OrthoData",
    "ortho_data",
    "orthogonality_all",
    "orthogonality_check",
]
