"""
Exact rational scalars and their "p/q" string form.

The scalar field of the laboratory is :class:`fractions.Fraction`, which keeps
its value in canonical form (positive denominator, coprime numerator).
"""

import re
from fractions import Fraction
from typing import TypeAlias

Rational: TypeAlias = Fraction

RationalLike: TypeAlias = Fraction | int

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def to_rational(value: RationalLike | str) -> Rational:
    """
    Convert an integer, a Fraction or a "p/q" string to a Rational.

    :param value: The value to convert.
    :return: The exact rational value.
    :raises ValueError: If the value is a float or a malformed string.
    """
    if isinstance(value, bool):
        raise ValueError("Booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ValueError(f"Cannot convert {value!r} to an exact rational")


def parse_rational(text: str) -> Rational:
    """
    Parse "p/q" or "p". Decimal notation is rejected.

    :param text: The string to parse.
    :return: The parsed rational.
    :raises ValueError: If the string is not of the form "p/q" or "p", or if
        the denominator is zero.
    """
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"Invalid rational '{text}', expected 'p/q' or 'p'")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ValueError(f"Invalid rational '{text}', zero denominator")
    return Fraction(numerator, denominator)


def format_rational(value: RationalLike) -> str:
    """
    Render a rational in canonical "p/q" form ("p" when q = 1).

    :param value: The rational to render.
    :return: The canonical string form.
    """
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
