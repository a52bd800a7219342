"""
Linear operators on the space of polynomials of degree at most n, stored as
exact matrices in monomial coordinates.
"""

from collections.abc import Callable
from enum import Enum
from fractions import Fraction

from typing_extensions import override

from leonard_trio_lab.errors import ClosureViolation, DegreeMismatch, DimensionMismatch
from leonard_trio_lab.exact.rational import Rational, RationalLike
from leonard_trio_lab.polyspace import matrix as mx
from leonard_trio_lab.polyspace.matrix import Matrix
from leonard_trio_lab.polyspace.poly import Poly

# headroom of the construction workspace, enough for (x+a)(x+b)T^+
WORKSPACE_EXTRA = 2


class BracketMode(str, Enum):
    """
    :cvar COMMUTATOR: AB - BA.
    :cvar ANTICOMMUTATOR: AB + BA.
    """

    COMMUTATOR = "commutator"
    ANTICOMMUTATOR = "anticommutator"


class Operator:
    """
    An endomorphism of C_n[x]. Column j of the matrix is the image of x^j;
    the product A @ B applies B first.

    :ivar _n: The top degree of the space (dimension n + 1).
    :ivar _matrix: The (n+1) x (n+1) matrix, read-only.
    :ivar _name: A label used in reports.
    """

    def __init__(self, n: int, matrix: Matrix, name: str = ""):
        assert matrix.shape == (n + 1, n + 1), (
            f"Operator on C_{n}[x] needs a {(n + 1, n + 1)} matrix, "
            f"got {matrix.shape}"
        )
        self._n = n
        self._matrix = matrix.copy()
        self._matrix.flags.writeable = False
        self._name = name

    @classmethod
    def from_action(
        cls,
        action: Callable[[Poly], Poly],
        n: int,
        name: str = "",
        truncate: bool = False,
    ) -> "Operator":
        """
        Tabulate an action on the monomials x^0..x^n.

        The action runs on a workspace of cap n + WORKSPACE_EXTRA, then every
        image is checked to have degree at most n before truncation.

        :param action: The polynomial map.
        :param n: The top degree of the space.
        :param name: A label used in reports.
        :param truncate: Drop coefficients above degree n instead of raising;
            only for degree-raising operators used on a padded workspace.
        :return: The operator.
        :raises ClosureViolation: If an image leaves C_n[x] and truncate is off.
        """
        cap = n + WORKSPACE_EXTRA
        columns: list[list[Rational]] = []
        for j in range(n + 1):
            image = action(Poly.monomial(j, cap))
            if image.degree > n and not truncate:
                raise ClosureViolation(
                    f"Operator {name or '?'} maps x^{j} to degree {image.degree} > {n}"
                )
            columns.append(list(image.with_cap(max(image.cap, n)).coeffs[: n + 1]))
        return cls(n, mx.from_columns(columns), name)

    @classmethod
    def identity(cls, n: int) -> "Operator":
        return cls(n, mx.identity(n + 1), "I")

    @classmethod
    def scalar(cls, n: int, value: RationalLike) -> "Operator":
        return cls(n, mx.identity(n + 1) * Fraction(value), "")

    @property
    def n(self) -> int:
        return self._n

    @property
    def matrix(self) -> Matrix:
        return self._matrix

    @property
    def name(self) -> str:
        return self._name

    def named(self, name: str) -> "Operator":
        return Operator(self._n, self._matrix, name)

    def _check_dim(self, other: "Operator") -> None:
        if self._n != other._n:
            raise DimensionMismatch(
                f"Operators on C_{self._n}[x] and C_{other._n}[x] do not compose"
            )

    def __matmul__(self, other: "Operator") -> "Operator":
        self._check_dim(other)
        return Operator(self._n, self._matrix @ other._matrix)

    def __add__(self, other: "Operator") -> "Operator":
        self._check_dim(other)
        return Operator(self._n, self._matrix + other._matrix)

    def __sub__(self, other: "Operator") -> "Operator":
        self._check_dim(other)
        return Operator(self._n, self._matrix - other._matrix)

    def __neg__(self) -> "Operator":
        return Operator(self._n, -self._matrix)

    def __rmul__(self, factor: RationalLike) -> "Operator":
        return Operator(self._n, self._matrix * Fraction(factor))

    def plus_scalar(self, value: RationalLike) -> "Operator":
        """
        The operator self + value * I.
        """
        return self + Operator.scalar(self._n, value)

    def power(self, k: int) -> "Operator":
        result = Operator.identity(self._n)
        for _ in range(k):
            result = result @ self
        return result

    def is_zero(self) -> bool:
        return mx.is_zero(self._matrix)

    def scalar_value(self) -> Rational | None:
        return mx.scalar_value(self._matrix)

    @override
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Operator):
            return False
        return self._n == other._n and mx.mat_equal(self._matrix, other._matrix)

    @override
    def __hash__(self) -> int:
        return hash((self._n, tuple(self._matrix.flat)))

    @override
    def __repr__(self) -> str:
        return f"Operator(n={self._n}, name={self._name!r})"


def apply(op: Operator, p: Poly) -> Poly:
    """
    Apply an operator to a polynomial as a matrix-vector product.

    :raises DegreeMismatch: If the degree of p exceeds op.n.
    """
    if p.degree > op.n:
        raise DegreeMismatch(
            f"Polynomial of degree {p.degree} is outside C_{op.n}[x] of {op.name!r}"
        )
    v = mx.from_columns([p.vector(op.n)])
    image = op.matrix @ v
    return Poly.from_coeffs(image[:, 0], max(op.n, p.cap))


def bracket(a: Operator, b: Operator, mode: BracketMode) -> Operator:
    """
    AB - BA or AB + BA.

    :raises DimensionMismatch: If the operators act on different spaces.
    """
    if mode == BracketMode.COMMUTATOR:
        return a @ b - b @ a
    return a @ b + b @ a


def commutator(a: Operator, b: Operator) -> Operator:
    return bracket(a, b, BracketMode.COMMUTATOR)


def anticommutator(a: Operator, b: Operator) -> Operator:
    return bracket(a, b, BracketMode.ANTICOMMUTATOR)
