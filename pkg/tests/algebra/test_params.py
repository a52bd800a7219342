from fractions import Fraction

import pytest

from leonard_trio_lab.algebra.params import (
    ParamKind,
    ParamSet,
    central_values,
    check_generic,
    core_factors,
    is_fully_generic,
    is_rational_generic,
    rational_vanishing,
)
from leonard_trio_lab.errors import NonGenericParams


class TestParamSet:
    def test_coerces_to_fractions(self) -> None:
        p = ParamSet(ParamKind.STANDARD, 3, 1, c=2)
        assert isinstance(p.a, Fraction)
        assert p.get_c() == 2
        assert not p.has_rho

    @pytest.mark.parametrize(
        "kind, fields",
        [
            (ParamKind.STANDARD, {}),
            (ParamKind.STANDARD, {"c": 1, "b": 1}),
            (ParamKind.GENERAL, {"c": 1}),
            (ParamKind.JACOBI, {}),
            (ParamKind.JACOBI, {"b": 1, "rho": 1}),
        ],
    )
    def test_invalid_fields(self, kind: ParamKind, fields: dict[str, int]) -> None:
        with pytest.raises(ValueError):
            ParamSet(kind, 2, Fraction(1, 3), **fields)  # type: ignore[arg-type]

    @pytest.mark.parametrize("n", [-1, True])
    def test_invalid_degree(self, n: int) -> None:
        with pytest.raises(ValueError):
            ParamSet(ParamKind.STANDARD, n, 1, c=1)

    def test_to_dict(self) -> None:
        p = ParamSet(ParamKind.STANDARD, 4, Fraction(1, 3), c=Fraction(-1, 5))
        assert p.to_dict() == {"kind": "standard", "n": 4, "a": "1/3", "c": "-1/5"}
        assert p.label() == "standard(n=4, a=1/3, c=-1/5)"


class TestCentralValues:
    def test_standard(self) -> None:
        a, c, n = Fraction(1, 3), Fraction(1, 5), 8
        cv = central_values(ParamSet(ParamKind.STANDARD, n, a, c=c))
        assert cv.eta == 2 * c + n
        assert cv.xi == (1 - a) * (a + n)
        assert cv.zeta == (c - a) * (a + c + n - 1)
        assert cv.casimir_meta == -cv.zeta
        assert cv.casimir_trio == -cv.xi

    def test_general(self) -> None:
        a, b, c = Fraction(1, 3), Fraction(2, 5), Fraction(1, 7)
        cv = central_values(ParamSet(ParamKind.GENERAL, 6, a, b=b, c=c))
        assert cv.casimir_meta == -cv.zeta
        assert cv.casimir_trio == -cv.xi

    def test_jacobi(self) -> None:
        cv = central_values(ParamSet(ParamKind.JACOBI, 3, 1, b=3))
        assert cv.xi == 2
        assert cv.eta == 0

    def test_meta_casimir_vanishes_when_a_equals_c(self) -> None:
        third = Fraction(1, 3)
        cv = central_values(ParamSet(ParamKind.STANDARD, 4, third, c=third))
        assert cv.casimir_meta == 0


class TestGenericity:
    def test_half_is_not_generic(self) -> None:
        p = ParamSet(ParamKind.STANDARD, 4, Fraction(1, 2), c=Fraction(1, 5))
        with pytest.raises(NonGenericParams) as info:
            check_generic(p)
        assert "2a-1" in info.value.factors

    def test_rho_factors(self) -> None:
        a = Fraction(1, 3)
        p = ParamSet(ParamKind.STANDARD, 4, a, c=Fraction(1, 5), rho=a + 2)
        with pytest.raises(NonGenericParams) as info:
            check_generic(p)
        assert info.value.factors == ["a-rho+2"]

    def test_factor_count(self) -> None:
        p = ParamSet(ParamKind.STANDARD, 3, Fraction(1, 3), c=1, rho=1)
        # a+m for m <= N, 2a+m for -1 <= m <= 2N, a+-rho+m for m <= N
        assert len(core_factors(p)) == 4 + 8 + 4 + 4

    def test_rational_factors(self) -> None:
        third = Fraction(1, 3)
        p = ParamSet(ParamKind.STANDARD, 2, third, c=third)
        check_generic(p)
        assert not is_rational_generic(p)
        assert rational_vanishing(p) == ["a-c+0"]
        assert not is_fully_generic(p)

    def test_other_kinds_have_no_factors(self) -> None:
        p = ParamSet(ParamKind.GENERAL, 3, Fraction(1, 2), b=0, c=Fraction(1, 2))
        check_generic(p)
        assert is_fully_generic(p)
