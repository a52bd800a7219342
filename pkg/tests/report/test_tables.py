from fractions import Fraction
from pathlib import Path

import pytest

from leonard_trio_lab.errors import DenominatorVanishes
from leonard_trio_lab.report.tables import (
    TableFunction,
    dumps_table,
    evaluate,
    value_table,
    write_table,
)
from leonard_trio_lab.specialfn.hahn import HahnParams

HAHN_GOLDEN = HahnParams(Fraction(1, 2), 2, rho=Fraction(1, 2))
RATIONAL_GOLDEN = HahnParams(Fraction(1), 2, c=Fraction(1, 2))


class TestEvaluate:
    def test_golden_values(self) -> None:
        assert evaluate(TableFunction.HAHN_Q, 1, 1, HAHN_GOLDEN) == Fraction(1, 2)
        assert evaluate(TableFunction.RATIONAL_U, 1, 1, RATIONAL_GOLDEN) == 3

    def test_undefined(self) -> None:
        p = HahnParams(Fraction(1), 2, c=Fraction(0))
        with pytest.raises(DenominatorVanishes):
            evaluate(TableFunction.RATIONAL_U, 1, 1, p)

    def test_needs(self) -> None:
        assert TableFunction.HAHN_Q.needs == "rho"
        assert TableFunction.RATIONAL_U.needs == "c"


class TestValueTable:
    def test_shape(self) -> None:
        rows = value_table(TableFunction.HAHN_Q, HAHN_GOLDEN)
        assert len(rows) == 9
        assert rows[0] == (0, 0, 1)
        assert rows[4] == (1, 1, Fraction(1, 2))

    def test_csv(self) -> None:
        text = dumps_table(value_table(TableFunction.HAHN_Q, HAHN_GOLDEN))
        lines = text.split("\n")
        assert lines[0] == "k,l,value"
        assert lines[5] == "1,1,1/2"
        assert text.endswith("\n")
        assert len(lines) == 11

    def test_write_table(self, tmp_path: Path) -> None:
        rows = value_table(TableFunction.RATIONAL_U, RATIONAL_GOLDEN)
        path = tmp_path / "tables" / "u.csv"
        write_table(rows, str(path))
        assert path.read_text(encoding="utf-8") == dumps_table(rows)
