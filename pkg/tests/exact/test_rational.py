from fractions import Fraction

import pytest

from leonard_trio_lab.exact.rational import (
    format_rational,
    parse_rational,
    to_rational,
)
from tests import NUM_TESTS, gen_random_rational


class TestParseRational:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("1/3", Fraction(1, 3)),
            ("-2/6", Fraction(-1, 3)),
            ("7", Fraction(7)),
            (" 4 / 8 ", Fraction(1, 2)),
            ("0", Fraction(0)),
        ],
    )
    def test_parse(self, text: str, expected: Fraction) -> None:
        assert parse_rational(text) == expected

    @pytest.mark.parametrize("text", ["0.5", "1/0", "1/-3", "a/b", "", "1e3"])
    def test_reject(self, text: str) -> None:
        with pytest.raises(ValueError):
            parse_rational(text)

    @pytest.mark.parametrize(
        "value", [gen_random_rational() for _ in range(NUM_TESTS)]
    )
    def test_format_is_canonical(self, value: Fraction) -> None:
        text = format_rational(value)
        assert parse_rational(text) == value
        if value.denominator == 1:
            assert "/" not in text


class TestToRational:
    def test_accepts_exact_values(self) -> None:
        assert to_rational(3) == Fraction(3)
        assert to_rational(Fraction(2, 4)) == Fraction(1, 2)
        assert to_rational("-5/10") == Fraction(-1, 2)

    @pytest.mark.parametrize("value", [0.5, True, None])
    def test_rejects_inexact_values(self, value: object) -> None:
        with pytest.raises(ValueError):
            to_rational(value)  # type: ignore[arg-type]

    def test_format_negative(self) -> None:
        assert format_rational(Fraction(-3, 6)) == "-1/2"
        assert format_rational(Fraction(4, 2)) == "2"
