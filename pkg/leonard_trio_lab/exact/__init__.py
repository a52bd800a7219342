"""
Exact rational arithmetic and hypergeometric kernels.
"""

from .rational import (
    Rational,
    RationalLike,
    format_rational,
    parse_rational,
    to_rational,
)
from .kernels import (
    Hyp3F2Spec,
    gen_binomial,
    hyp3f2_unit,
    minus_one_power,
    pochhammer,
)

__all__ = [
    "Rational",
    "RationalLike",
    "format_rational",
    "parse_rational",
    "to_rational",
    "Hyp3F2Spec",
    "gen_binomial",
    "hyp3f2_unit",
    "minus_one_power",
    "pochhammer",
]
