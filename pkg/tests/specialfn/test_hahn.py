from fractions import Fraction

import pytest

from leonard_trio_lab.algebra.params import ParamKind, ParamSet
from leonard_trio_lab.errors import DenominatorVanishes, IdentityFailure
from leonard_trio_lab.exact.kernels import pochhammer
from leonard_trio_lab.specialfn.hahn import (
    HahnParams,
    check_cleared_numerator,
    cleared_numerator,
    finite_difference,
    hahn_Q,
    rational_U,
)
from tests import gen_generic_params_list


class TestGoldenValues:
    def test_hahn_polynomial(self) -> None:
        p = HahnParams(Fraction(1, 2), 2, rho=Fraction(1, 2))
        assert hahn_Q(1, 1, p) == Fraction(1, 2)

    def test_rational_function(self) -> None:
        assert rational_U(1, 1, 1, Fraction(1, 2), 2) == 3

    def test_undefined_value(self) -> None:
        with pytest.raises(DenominatorVanishes):
            rational_U(1, 1, 1, 0, 2)


@pytest.mark.parametrize("params", gen_generic_params_list())
class TestHahnFamilies:
    def test_first_polynomial_is_one(self, params: ParamSet) -> None:
        p = HahnParams.from_params(params)
        assert all(hahn_Q(0, ell, p) == 1 for ell in range(params.n + 1))

    def test_value_at_zero_is_one(self, params: ParamSet) -> None:
        p = HahnParams.from_params(params)
        for k in range(params.n + 1):
            assert hahn_Q(k, 0, p) == 1
            assert rational_U(k, 0, params.a, params.get_c(), params.n) == 1

    def test_cleared_numerator_matches(self, params: ParamSet) -> None:
        a, c, n = params.a, params.get_c(), params.n
        for k in range(n + 1):
            for ell in range(n + 1):
                expected = rational_U(k, ell, a, c, n) * pochhammer(a - c - ell, k)
                assert cleared_numerator(k, ell, a, c, n) == expected

    def test_cleared_numerator_is_polynomial(self, params: ParamSet) -> None:
        for k in range(params.n + 1):
            check_cleared_numerator(k, params.a, params.get_c(), params.n)


class TestFiniteDifference:
    def test_cubic(self) -> None:
        values = [Fraction(x**3) for x in range(5)]
        assert finite_difference(values[:4]) == 6
        assert finite_difference(values) == 0

    def test_constant(self) -> None:
        assert finite_difference([Fraction(7)]) == 7

    def test_cleared_numerator_failure(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setattr(
            "leonard_trio_lab.specialfn.hahn.cleared_numerator",
            lambda k, ell, a, c, n: Fraction(ell) ** (2 * k + 1),
        )
        with pytest.raises(IdentityFailure) as e:
            check_cleared_numerator(1, 1, Fraction(1, 3), 3)
        assert e.value.detail["k"] == "1"


def test_from_params_keeps_optional_fields() -> None:
    params = ParamSet(ParamKind.STANDARD, 3, Fraction(1, 3), c=Fraction(1, 5))
    p = HahnParams.from_params(params)
    assert p == HahnParams(Fraction(1, 3), 3, rho=None, c=Fraction(1, 5))
