"""
Bases of the polynomial space and the exact change-of-basis machinery.
"""

from dataclasses import dataclass, field
from enum import Enum

from leonard_trio_lab.errors import DimensionMismatch, SingularBasis
from leonard_trio_lab.polyspace import matrix as mx
from leonard_trio_lab.polyspace.matrix import Matrix
from leonard_trio_lab.polyspace.operator import Operator
from leonard_trio_lab.polyspace.poly import Poly


class BasisKind(str, Enum):
    """
    :cvar A: Eigenbasis of V, a_n = (x+a)_n (x+1-a-N)_{N-n}.
    :cvar B: Eigenbasis of Vt, b_n = (x+c)_n.
    :cvar C: Eigenbasis of K1, c_n = (rho-x)_n.
    :cvar D: Generalized eigenbasis of (X, Z), d_n = -(x+c+1)_n.
    :cvar S: Split basis, s_n = (x+a)_n.
    :cvar MONOMIAL: x^n.
    """

    A = "a"
    B = "b"
    C = "c"
    D = "d"
    S = "s"
    MONOMIAL = "monomial"


@dataclass(frozen=True, slots=True)
class BasisFamily:
    """
    An ordered basis of C_n[x].

    :cvar kind: Which family the members belong to.
    :cvar members: The n + 1 basis polynomials.
    :cvar monomial_matrix: Column j holds the monomial coordinates of member j.
    """

    kind: BasisKind
    members: tuple[Poly, ...]
    monomial_matrix: Matrix = field(init=False, repr=False, compare=False)
    _inverse: Matrix | None = field(
        default=None, init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        assert len(self.members) > 0, "A basis needs at least one member"
        n = self.n
        columns = [p.vector(n) for p in self.members]
        object.__setattr__(self, "monomial_matrix", mx.from_columns(columns))
        self.monomial_matrix.flags.writeable = False

    @property
    def n(self) -> int:
        return len(self.members) - 1

    @classmethod
    def monomial(cls, n: int) -> "BasisFamily":
        members = tuple(Poly.monomial(j, n) for j in range(n + 1))
        return cls(BasisKind.MONOMIAL, members)

    def inverse_matrix(self) -> Matrix:
        """
        The inverse of the monomial matrix, computed on first use.

        :raises SingularBasis: If the members are linearly dependent.
        """
        if self._inverse is None:
            try:
                inv = mx.inverse(self.monomial_matrix)
            except SingularBasis as e:
                raise SingularBasis(
                    f"Basis {self.kind.value} is not invertible: {e}"
                ) from e
            inv.flags.writeable = False
            object.__setattr__(self, "_inverse", inv)
        assert self._inverse is not None
        return self._inverse

    def check_invertible(self) -> None:
        """
        :raises SingularBasis: If the members are linearly dependent.
        """
        self.inverse_matrix()


def matrix_in_basis(op: Operator, basis: BasisFamily) -> Matrix:
    """
    The matrix M with op(basis_j) = sum_i M[i][j] basis_i, that is
    G^-1 [op] G for the monomial matrix G of the basis.

    :param op: The operator.
    :param basis: A basis of the same space.
    :return: The representing matrix.
    :raises DimensionMismatch: If the dimensions disagree.
    :raises SingularBasis: If the basis is not invertible.
    """
    if op.n != basis.n:
        raise DimensionMismatch(
            f"Operator on C_{op.n}[x] has no matrix in a basis of C_{basis.n}[x]"
        )
    return mx.conjugate(basis.inverse_matrix(), op.matrix, basis.monomial_matrix)


def change_of_basis(source: BasisFamily, target: BasisFamily) -> Matrix:
    """
    The matrix G with source_k = sum_l G[l][k] target_l.

    :raises DimensionMismatch: If the bases span spaces of different dimension.
    :raises SingularBasis: If the target basis is not invertible.
    """
    if source.n != target.n:
        raise DimensionMismatch(
            f"Bases of C_{source.n}[x] and C_{target.n}[x] are not comparable"
        )
    return target.inverse_matrix() @ source.monomial_matrix
