"""
Value tables of Q_k(l) and U_k(l) and their CSV form.

Values are evaluated without the genericity predicate; an undefined value
raises DenominatorVanishes.
"""

import csv
import io
import os
from enum import Enum

from leonard_trio_lab.exact.rational import Rational, format_rational
from leonard_trio_lab.specialfn.hahn import HahnParams, hahn_Q, rational_U

TableRow = tuple[int, int, Rational]


class TableFunction(str, Enum):
    """
    :cvar HAHN_Q: Q_k(l), needs rho.
    :cvar RATIONAL_U: U_k(l; a, c, N), needs c.
    """

    HAHN_Q = "hahn-q"
    RATIONAL_U = "rational-u"

    @property
    def needs(self) -> str:
        return "rho" if self == TableFunction.HAHN_Q else "c"


def evaluate(function: TableFunction, k: int, ell: int, p: HahnParams) -> Rational:
    """
    A single value Q_k(l) or U_k(l; a, c, N).

    :raises DenominatorVanishes: If the value is undefined.
    """
    if function == TableFunction.HAHN_Q:
        return hahn_Q(k, ell, p)
    assert p.c is not None, "Hahn rational functions need c"
    return rational_U(k, ell, p.a, p.c, p.n)


def value_table(function: TableFunction, p: HahnParams) -> list[TableRow]:
    """
    Every value for 0 <= k, l <= N, row-major in k.

    :raises DenominatorVanishes: If one of the values is undefined.
    """
    size = p.n + 1
    return [
        (k, ell, evaluate(function, k, ell, p))
        for k in range(size)
        for ell in range(size)
    ]


def dumps_table(rows: list[TableRow]) -> str:
    """
    CSV with header "k,l,value", values as "p/q" strings.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["k", "l", "value"])
    for k, ell, value in rows:
        writer.writerow([k, ell, format_rational(value)])
    return buffer.getvalue()


def write_table(rows: list[TableRow], file_path: str) -> None:
    base_dir = os.path.dirname(file_path)
    if base_dir:
        os.makedirs(base_dir, exist_ok=True)
    with open(file_path, "w", encoding="utf-8", newline="") as file:
        file.write(dumps_table(rows))
