from fractions import Fraction

import pytest

from leonard_trio_lab.errors import DimensionMismatch, SingularBasis
from leonard_trio_lab.polyspace import matrix as mx
from tests import NUM_TESTS, gen_random_rational


def _random_upper_unitriangular(n: int) -> mx.Matrix:
    m = mx.identity(n)
    for i in range(n):
        for j in range(i + 1, n):
            m[i, j] = gen_random_rational()
    return m


class TestSolve:
    @pytest.mark.parametrize("n", range(1, NUM_TESTS))
    def test_inverse(self, n: int) -> None:
        upper = _random_upper_unitriangular(n)
        a = upper.T @ upper
        assert mx.mat_equal(a @ mx.inverse(a), mx.identity(n))

    def test_pivot_swap(self) -> None:
        a = mx.as_matrix([[0, 1], [1, 0]])
        b = mx.as_matrix([[2], [3]])
        assert mx.mat_equal(mx.solve(a, b), mx.as_matrix([[3], [2]]))

    def test_singular(self) -> None:
        with pytest.raises(SingularBasis):
            mx.inverse(mx.as_matrix([[1, 2], [2, 4]]))

    def test_shape_mismatch(self) -> None:
        with pytest.raises(DimensionMismatch):
            mx.solve(mx.identity(2), mx.zeros(3, 1))


class TestHelpers:
    def test_scalar_value(self) -> None:
        assert mx.scalar_value(mx.identity(3) * Fraction(2, 3)) == Fraction(2, 3)
        assert mx.scalar_value(mx.diagonal([1, 2])) is None

    def test_first_difference(self) -> None:
        a = mx.identity(2)
        b = mx.identity(2)
        b[1, 0] = Fraction(5)
        assert mx.first_difference(a, a) is None
        assert mx.first_difference(a, b) == (1, 0, 0, 5)

    def test_from_columns(self) -> None:
        m = mx.from_columns([[1, 2], [3, 4]])
        assert m[1, 0] == 2
        assert m[0, 1] == 3

    def test_to_strings(self) -> None:
        assert mx.to_strings(mx.diagonal([Fraction(1, 2), -3])) == [
            ["1/2", "0"],
            ["0", "-3"],
        ]
