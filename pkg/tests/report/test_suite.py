import json
from fractions import Fraction
from pathlib import Path

import pytest

from leonard_trio_lab.algebra.params import ParamKind, ParamSet
from leonard_trio_lab.checks import CheckStatus
from leonard_trio_lab.errors import NonGenericParams
from leonard_trio_lab.report.report import (
    Summary,
    VerificationReport,
    dumps_report,
    write_report,
)
from leonard_trio_lab.report.suite import run_suite
from tests import gen_generic_params


def _by_name(report: VerificationReport) -> dict[str, CheckStatus]:
    return {check.name: check.status for check in report.checks}


class TestRunSuite:
    @pytest.mark.parametrize("n", [0, 1, 3])
    def test_standard_all_pass(self, n: int) -> None:
        report = run_suite(gen_generic_params(ParamKind.STANDARD, n))
        assert report.ok, [c.to_dict() for c in report.failing()]
        assert report.summary == Summary(40, 40, 0, 0)
        assert report.facts["trio_verdict"]["is_leonard_trio"] is True

    def test_standard_without_rho(self) -> None:
        report = run_suite(gen_generic_params(ParamKind.STANDARD, 3, with_rho=False))
        assert report.ok
        assert report.summary.skipped == 11
        statuses = _by_name(report)
        assert statuses["hahn-embed relations"] == CheckStatus.SKIPPED
        assert statuses["leonard pair (V, K1)"] == CheckStatus.SKIPPED
        assert statuses["connection a->b"] == CheckStatus.PASS

    def test_general(self) -> None:
        report = run_suite(gen_generic_params(ParamKind.GENERAL, 3))
        assert report.ok
        statuses = _by_name(report)
        assert statuses["hahn-embed relations"] == CheckStatus.PASS
        assert statuses["meta casimir"] == CheckStatus.PASS
        assert statuses["eigenvectors of the a-basis"] == CheckStatus.SKIPPED

    def test_jacobi(self) -> None:
        report = run_suite(gen_generic_params(ParamKind.JACOBI, 3))
        assert report.ok
        assert report.summary == Summary(33, 1, 0, 32)
        assert _by_name(report)["jacobi relations"] == CheckStatus.PASS

    def test_equal_a_and_c(self) -> None:
        params = ParamSet(
            ParamKind.STANDARD,
            3,
            Fraction(1, 3),
            c=Fraction(1, 3),
            rho=Fraction(2, 7),
        )
        report = run_suite(params)
        assert report.ok
        assert report.facts["casimir_meta"] == "0"
        statuses = _by_name(report)
        for name in (
            "connection a->b",
            "connection b->a",
            "biorthogonality of U_k",
            "rational bispectrality",
        ):
            assert statuses[name] == CheckStatus.SKIPPED, name
        skipped = next(c for c in report.checks if c.name == "connection a->b")
        assert "a-c+0" in skipped.detail["reason"]

    def test_central_values(self) -> None:
        params = ParamSet(
            ParamKind.STANDARD, 2, Fraction(1, 3), c=Fraction(1, 5), rho=Fraction(2, 7)
        )
        facts = run_suite(params).facts
        assert facts["central_values"]["eta"] == "12/5"
        assert facts["casimir_trio"] == "-14/9"

    def test_non_generic(self) -> None:
        params = ParamSet(ParamKind.STANDARD, 2, Fraction(1, 2), c=Fraction(1, 5))
        with pytest.raises(NonGenericParams):
            run_suite(params)

    def test_failure_is_recorded(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setattr(
            "leonard_trio_lab.specialfn.connection.hahn_Q",
            lambda k, ell, p: Fraction(0),
        )
        report = run_suite(gen_generic_params(ParamKind.STANDARD, 2))
        assert not report.ok
        failing = {check.name: check for check in report.failing()}
        assert "connection a->c" in failing
        assert failing["connection a->c"].detail["error"] == "OracleMismatch"
        assert _by_name(report)["orthogonality of Q_k"] == CheckStatus.PASS


class TestReportSerialization:
    def test_layout(self) -> None:
        report = run_suite(gen_generic_params(ParamKind.STANDARD, 1))
        text = dumps_report(report.to_dict())
        assert text.endswith("}\n")
        data = json.loads(text)
        assert list(data) == ["checks", "facts", "params", "summary"]
        assert data["params"]["kind"] == "standard"
        assert data["summary"]["total"] == len(data["checks"])

    def test_deterministic(self) -> None:
        params = gen_generic_params(ParamKind.STANDARD, 2)
        first = dumps_report(run_suite(params).to_dict())
        second = dumps_report(run_suite(params).to_dict())
        assert first == second

    def test_write_report(self, tmp_path: Path) -> None:
        report = run_suite(gen_generic_params(ParamKind.JACOBI, 1))
        path = tmp_path / "out" / "report.json"
        write_report(report.to_dict(), str(path))
        assert path.read_text(encoding="utf-8") == dumps_report(report.to_dict())
