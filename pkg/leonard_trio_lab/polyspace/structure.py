"""
Band-structure classification of square matrices.
"""

from dataclasses import dataclass
from enum import Enum

from leonard_trio_lab.polyspace.matrix import Matrix


class StructureTag(str, Enum):
    """
    Tags ordered from the finest to the coarsest.
    """

    ZERO = "zero"
    SCALAR = "scalar"
    DIAGONAL = "diagonal"
    UPPER_BIDIAGONAL = "upper-bidiagonal"
    LOWER_BIDIAGONAL = "lower-bidiagonal"
    IRREDUCIBLE_TRIDIAGONAL = "irreducible-tridiagonal"
    TRIDIAGONAL = "tridiagonal"
    OTHER = "other"


_DIAGONAL_TAGS = frozenset(
    {StructureTag.ZERO, StructureTag.SCALAR, StructureTag.DIAGONAL}
)


@dataclass(frozen=True, slots=True)
class StructureClass:
    """
    :cvar tag: The finest matching band shape.
    :cvar multiplicity_free: For the diagonal shapes, whether the diagonal
        entries are pairwise distinct; always False otherwise.
    """

    tag: StructureTag
    multiplicity_free: bool = False

    def is_diagonal(self) -> bool:
        return self.tag in _DIAGONAL_TAGS

    def is_tridiagonal(self) -> bool:
        """
        Diagonal and bidiagonal shapes count as degenerate tridiagonal.
        """
        return self.tag != StructureTag.OTHER

    def is_diagonal_multiplicity_free(self) -> bool:
        return self.is_diagonal() and self.multiplicity_free

    def __str__(self) -> str:
        if self.is_diagonal():
            suffix = "multiplicity-free" if self.multiplicity_free else "repeated"
            return f"{self.tag.value} ({suffix})"
        return self.tag.value


def _offsets(m: Matrix) -> set[int]:
    """
    The set of column-minus-row offsets carrying a nonzero entry.
    """
    rows, cols = m.shape
    return {j - i for i in range(rows) for j in range(cols) if m[i, j] != 0}


def is_irreducible_tridiagonal(m: Matrix) -> bool:
    """
    Tridiagonal with every sub- and super-diagonal entry nonzero. A 1x1
    matrix is vacuously irreducible.
    """
    n = m.shape[0]
    if not _offsets(m) <= {-1, 0, 1}:
        return False
    return all(m[i + 1, i] != 0 and m[i, i + 1] != 0 for i in range(n - 1))


def classify(m: Matrix) -> StructureClass:
    """
    Classify a square matrix by its band shape.

    Matrices of operators hold the image of member j in column j, so an action
    op m_k = x m_k + y m_{k-1}, like Z on the b-basis, is upper bidiagonal.
    The transposed reading, with coefficients along rows, swaps the upper
    and lower tags.

    :param m: The matrix.
    :return: The finest matching class.
    """
    rows, cols = m.shape
    assert rows == cols, f"Only square matrices are classified, got {m.shape}"
    offsets = _offsets(m)
    if not offsets <= {-1, 0, 1}:
        return StructureClass(StructureTag.OTHER)

    if offsets <= {0}:
        entries = [m[i, i] for i in range(rows)]
        distinct = len(set(entries)) == len(entries)
        if not offsets:
            return StructureClass(StructureTag.ZERO, distinct)
        if all(v == entries[0] for v in entries):
            return StructureClass(StructureTag.SCALAR, distinct)
        return StructureClass(StructureTag.DIAGONAL, distinct)

    if -1 not in offsets:
        return StructureClass(StructureTag.UPPER_BIDIAGONAL)
    if 1 not in offsets:
        return StructureClass(StructureTag.LOWER_BIDIAGONAL)
    if is_irreducible_tridiagonal(m):
        return StructureClass(StructureTag.IRREDUCIBLE_TRIDIAGONAL)
    return StructureClass(StructureTag.TRIDIAGONAL)
