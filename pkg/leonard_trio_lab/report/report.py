"""
Verification reports and their JSON serialization.
"""

import json
import os
from dataclasses import dataclass, field
from typing import Any

from leonard_trio_lab.algebra.params import ParamSet
from leonard_trio_lab.checks import CheckResult, CheckStatus


@dataclass(frozen=True, slots=True)
class Summary:
    total: int
    passed: int
    failed: int
    skipped: int

    @classmethod
    def of(cls, checks: list[CheckResult]) -> "Summary":
        count = {status: 0 for status in CheckStatus}
        for check in checks:
            count[check.status] += 1
        return cls(
            total=len(checks),
            passed=count[CheckStatus.PASS],
            failed=count[CheckStatus.FAIL],
            skipped=count[CheckStatus.SKIPPED],
        )

    def to_dict(self) -> dict[str, int]:
        return {
            "total": self.total,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
        }


@dataclass(frozen=True, slots=True)
class VerificationReport:
    """
    The outcome of the full suite on one parameter set.

    :cvar params: The parameter set.
    :cvar checks: Every check, in suite order.
    :cvar facts: Values computed along the way that are not checks, such as
        the Casimir scalars and the trio verdict.
    """

    params: ParamSet
    checks: list[CheckResult]
    facts: dict[str, Any] = field(default_factory=dict)

    @property
    def summary(self) -> Summary:
        return Summary.of(self.checks)

    @property
    def ok(self) -> bool:
        return self.summary.failed == 0

    def failing(self) -> list[CheckResult]:
        return [check for check in self.checks if check.status == CheckStatus.FAIL]

    def to_dict(self) -> dict[str, Any]:
        return {
            "params": self.params.to_dict(),
            "checks": [check.to_dict() for check in self.checks],
            "facts": self.facts,
            "summary": self.summary.to_dict(),
        }


def dumps_report(data: dict[str, Any]) -> str:
    """
    Serialize a report deterministically: sorted keys, two-space indent and a
    trailing newline.
    """
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def write_report(data: dict[str, Any], file_path: str) -> None:
    """
    Write a serialized report, creating the parent directory if needed.

    :param data: The report as returned by a ``to_dict`` method.
    :param file_path: The destination.
    """
    base_dir = os.path.dirname(file_path)
    if base_dir:
        os.makedirs(base_dir, exist_ok=True)
    with open(file_path, "w", encoding="utf-8", newline="\n") as file:
        file.write(dumps_report(data))
