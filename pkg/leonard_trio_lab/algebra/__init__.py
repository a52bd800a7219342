"""
Realizations of the meta and trio Hahn algebras and their relation checks.
"""

from .params import (
    CentralValues,
    ParamKind,
    ParamSet,
    central_values,
    check_generic,
    core_factors,
    is_fully_generic,
    is_rational_generic,
    rational_factors,
    rational_vanishing,
)
from .realization import OperatorSet, realize
from .relations import (
    CasimirKind,
    ResidualFamily,
    ResidualSet,
    casimir_check,
    casimir_operator,
    isomorphism_check,
    relation_residuals,
)

__all__ = [
    "CentralValues",
    "ParamKind",
    "ParamSet",
    "central_values",
    "check_generic",
    "core_factors",
    "is_fully_generic",
    "is_rational_generic",
    "rational_factors",
    "rational_vanishing",
    "OperatorSet",
    "realize",
    "CasimirKind",
    "ResidualFamily",
    "ResidualSet",
    "casimir_check",
    "casimir_operator",
    "isomorphism_check",
    "relation_residuals",
]
