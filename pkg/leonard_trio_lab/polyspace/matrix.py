"""
Dense matrices of exact rationals.

Matrices are numpy arrays of dtype ``object`` holding :class:`Fraction`
entries, so that products and sums run through exact rational arithmetic.
"""

from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Any, TypeAlias

import numpy as np
import numpy.typing as npt

from leonard_trio_lab.errors import DimensionMismatch, SingularBasis
from leonard_trio_lab.exact.rational import Rational, RationalLike, format_rational

Matrix: TypeAlias = npt.NDArray[np.object_]


def as_matrix(rows: Iterable[Iterable[RationalLike]]) -> Matrix:
    """
    Build an exact matrix from nested rows.
    """
    data = [[Fraction(v) for v in row] for row in rows]
    out = np.empty((len(data), len(data[0]) if data else 0), dtype=object)
    for i, row in enumerate(data):
        for j, v in enumerate(row):
            out[i, j] = v
    return out


def zeros(rows: int, cols: int | None = None) -> Matrix:
    return np.full((rows, rows if cols is None else cols), Fraction(0), dtype=object)


def identity(n: int) -> Matrix:
    out = zeros(n)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def diagonal(values: Sequence[RationalLike]) -> Matrix:
    out = zeros(len(values))
    for i, v in enumerate(values):
        out[i, i] = Fraction(v)
    return out


def from_columns(columns: Sequence[Sequence[RationalLike]]) -> Matrix:
    """
    Build a matrix whose j-th column is ``columns[j]``.
    """
    return as_matrix(columns).T.copy()


def is_zero(m: Matrix) -> bool:
    return all(v == 0 for v in m.flat)


def mat_equal(a: Matrix, b: Matrix) -> bool:
    if a.shape != b.shape:
        return False
    return all(x == y for x, y in zip(a.flat, b.flat))


def first_difference(a: Matrix, b: Matrix) -> tuple[int, int, Any, Any] | None:
    """
    Locate the first entry, in row-major order, where two matrices differ.

    :return: (row, column, entry of a, entry of b), or None if equal.
    :raises DimensionMismatch: If the shapes differ.
    """
    if a.shape != b.shape:
        raise DimensionMismatch(f"Shapes {a.shape} and {b.shape} differ")
    rows, cols = a.shape
    for i in range(rows):
        for j in range(cols):
            if a[i, j] != b[i, j]:
                return i, j, a[i, j], b[i, j]
    return None


def scalar_value(m: Matrix) -> Rational | None:
    """
    The scalar s if m = s * I, otherwise None.
    """
    rows, cols = m.shape
    if rows != cols:
        return None
    s = Fraction(m[0, 0])
    for i in range(rows):
        for j in range(cols):
            if m[i, j] != (s if i == j else 0):
                return None
    return s


def to_strings(m: Matrix) -> list[list[str]]:
    """
    Row-major "p/q" strings, the JSON form of a matrix.
    """
    return [[format_rational(v) for v in row] for row in m]


def solve(a: Matrix, b: Matrix) -> Matrix:
    """
    Solve a X = b exactly by Gauss-Jordan elimination.

    Any nonzero pivot is exact; the first nonzero entry of the column is used.

    :param a: A square invertible matrix.
    :param b: The right-hand sides, one per column.
    :return: The solution X.
    :raises DimensionMismatch: If the shapes are incompatible.
    :raises SingularBasis: If a is not invertible.
    """
    n = a.shape[0]
    if a.shape != (n, n) or b.shape[0] != n:
        raise DimensionMismatch(f"Cannot solve {a.shape} system for {b.shape}")
    m = b.shape[1]
    x = [[Fraction(v) for v in row] for row in a]
    y = [[Fraction(v) for v in row] for row in b]

    for i in range(n):
        pivot = next((r for r in range(i, n) if x[r][i] != 0), None)
        if pivot is None:
            raise SingularBasis(f"Matrix is not invertible (column {i})")
        if pivot != i:
            x[i], x[pivot] = x[pivot], x[i]
            y[i], y[pivot] = y[pivot], y[i]
        inv = 1 / x[i][i]
        x[i] = [v * inv if v else v for v in x[i]]
        y[i] = [v * inv if v else v for v in y[i]]
        for r in range(n):
            if r == i or x[r][i] == 0:
                continue
            f = x[r][i]
            # zero entries of the pivot row leave row r unchanged
            x[r] = [u - f * v if v else u for u, v in zip(x[r], x[i])]
            y[r] = [u - f * v if v else u for u, v in zip(y[r], y[i])]

    out = zeros(n, m)
    for i in range(n):
        for j in range(m):
            out[i, j] = y[i][j]
    return out


def inverse(a: Matrix) -> Matrix:
    return solve(a, identity(a.shape[0]))


def conjugate(inv: Matrix, m: Matrix, g: Matrix) -> Matrix:
    """
    The product inv m g, with inv the inverse of g: the matrix of m in the
    basis whose coordinates are the columns of g.
    """
    return inv @ (m @ g)
