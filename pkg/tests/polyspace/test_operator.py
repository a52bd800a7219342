from fractions import Fraction
from functools import reduce

import pytest

from leonard_trio_lab.errors import (
    ClosureViolation,
    DegreeMismatch,
    DimensionMismatch,
    SingularBasis,
)
from leonard_trio_lab.polyspace import matrix as mx
from leonard_trio_lab.polyspace.basis import (
    BasisFamily,
    BasisKind,
    change_of_basis,
    matrix_in_basis,
)
from leonard_trio_lab.polyspace.operator import (
    Operator,
    anticommutator,
    apply,
    commutator,
)
from leonard_trio_lab.polyspace.matrix import Matrix
from leonard_trio_lab.polyspace.poly import Poly, poch_poly
from tests import gen_random_rational


def _forward_difference(n: int) -> Operator:
    return Operator.from_action(lambda p: p.shift(1) - p, n, "Delta")


def _backward_difference(n: int) -> Operator:
    return Operator.from_action(lambda p: p - p.shift(-1), n, "Nabla")


def _multiply_by_x(n: int, truncate: bool = False) -> Operator:
    return Operator.from_action(
        lambda p: Poly.monomial(1, p.cap) * p, n, "x", truncate=truncate
    )


def _random_matrix(n: int) -> Matrix:
    return mx.as_matrix(
        [[gen_random_rational() for _ in range(n + 1)] for _ in range(n + 1)]
    )


def _random_poly(n: int) -> Poly:
    return Poly.from_coeffs([gen_random_rational() for _ in range(n + 1)], n)


def _random_basis(n: int) -> BasisFamily:
    # member k has degree exactly k, so the basis is triangular and invertible
    members = tuple(
        Poly.from_coeffs(
            [gen_random_rational() for _ in range(k)] + [gen_random_rational(1, 20)],
            n,
        )
        for k in range(n + 1)
    )
    return BasisFamily(BasisKind.S, members)


class TestOperator:
    @pytest.mark.parametrize("n", range(5))
    def test_from_action(self, n: int) -> None:
        delta = _forward_difference(n)
        for j in range(n + 1):
            p = Poly.monomial(j, n)
            assert apply(delta, p) == p.shift(1) - p

    def test_closure_violation(self) -> None:
        with pytest.raises(ClosureViolation):
            _multiply_by_x(3)

    def test_truncate(self) -> None:
        x = _multiply_by_x(2, truncate=True)
        assert apply(x, Poly.monomial(2, 2)).is_zero()
        assert apply(x, Poly.monomial(1, 2)) == Poly.monomial(2, 2)

    def test_degree_mismatch(self) -> None:
        with pytest.raises(DegreeMismatch):
            apply(Operator.identity(2), Poly.monomial(3, 3))

    def test_dimension_mismatch(self) -> None:
        with pytest.raises(DimensionMismatch):
            _ = Operator.identity(2) @ Operator.identity(3)

    def test_algebra(self) -> None:
        delta = _forward_difference(3)
        ident = Operator.identity(3)
        assert (delta + ident) - ident == delta
        assert (2 * delta).plus_scalar(1) == delta + delta + ident
        assert delta.power(4).is_zero()
        assert not delta.power(3).is_zero()
        assert commutator(delta, delta).is_zero()
        assert anticommutator(delta, ident) == 2 * delta
        assert Operator.scalar(3, Fraction(1, 2)).scalar_value() == Fraction(1, 2)

    def test_matrix_is_read_only(self) -> None:
        op = Operator.identity(1)
        with pytest.raises(ValueError):
            op.matrix[0, 0] = Fraction(2)


class TestBasis:
    @pytest.mark.parametrize("n", range(1, 5))
    def test_matrix_in_basis(self, n: int) -> None:
        # (x)_k - (x-1)_k = k (x)_{k-1}
        members = tuple(poch_poly(0, k, False, n) for k in range(n + 1))
        basis = BasisFamily(BasisKind.S, members)
        m = matrix_in_basis(_backward_difference(n), basis)
        expected = mx.zeros(n + 1)
        for k in range(1, n + 1):
            expected[k - 1, k] = Fraction(k)
        assert mx.mat_equal(m, expected)

    @pytest.mark.parametrize("n", range(4))
    def test_change_of_basis_round_trip(self, n: int) -> None:
        monomial = BasisFamily.monomial(n)
        members = tuple(poch_poly(Fraction(1, 3), k, False, n) for k in range(n + 1))
        other = BasisFamily(BasisKind.S, members)
        forward = change_of_basis(other, monomial)
        backward = change_of_basis(monomial, other)
        assert mx.mat_equal(forward, other.monomial_matrix)
        assert mx.mat_equal(forward @ backward, mx.identity(n + 1))

    @pytest.mark.parametrize("n", range(1, 5))
    def test_inverse_is_cached(self, n: int) -> None:
        basis = _random_basis(n)
        inv = basis.inverse_matrix()
        assert inv is basis.inverse_matrix()
        assert mx.mat_equal(inv @ basis.monomial_matrix, mx.identity(n + 1))

    def test_singular_basis(self) -> None:
        members = (Poly.constant(1, 2), Poly.monomial(1, 2), Poly.monomial(1, 2))
        basis = BasisFamily(BasisKind.S, members)
        with pytest.raises(SingularBasis):
            basis.check_invertible()
        with pytest.raises(SingularBasis):
            matrix_in_basis(Operator.identity(2), basis)


@pytest.mark.parametrize("n", range(1, 5))
class TestRandomOperators:
    def test_apply_is_linear(self, n: int) -> None:
        op = Operator(n, _random_matrix(n))
        p, q = _random_poly(n), _random_poly(n)
        s = gen_random_rational()
        assert apply(op, p + q.scale(s)) == apply(op, p) + apply(op, q).scale(s)

    def test_bracket_symmetries(self, n: int) -> None:
        a = Operator(n, _random_matrix(n))
        b = Operator(n, _random_matrix(n))
        assert commutator(a, b) == -commutator(b, a)
        assert anticommutator(a, b) == anticommutator(b, a)
        assert commutator(a, b) + anticommutator(a, b) == 2 * (a @ b)

    def test_matrix_in_basis_is_conjugation(self, n: int) -> None:
        op = Operator(n, _random_matrix(n))
        basis = _random_basis(n)
        g = basis.monomial_matrix
        m = matrix_in_basis(op, basis)
        assert mx.mat_equal(m, mx.inverse(g) @ op.matrix @ g)
        for j, member in enumerate(basis.members):
            image = reduce(
                lambda acc, i: acc + basis.members[i].scale(m[i, j]),
                range(n + 1),
                Poly.zero(n),
            )
            assert apply(op, member) == image
