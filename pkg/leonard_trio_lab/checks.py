"""
Outcome records of verification checks, shared by every module that
verifies an identity and by the report assembly.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from leonard_trio_lab.errors import VerificationError


class CheckStatus(str, Enum):
    """
    :cvar PASS: The identity holds exactly.
    :cvar FAIL: The identity does not hold; the detail carries residuals.
    :cvar SKIPPED: The check does not apply to the parameters; the detail
        carries the reason.
    """

    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


@dataclass(frozen=True, slots=True)
class CheckResult:
    """
    :cvar name: Name of the check, unique within a report.
    :cvar family: Group of checks it belongs to.
    :cvar status: The outcome.
    :cvar detail: Residual summary; exact rationals rendered as "p/q".
    """

    name: str
    family: str
    status: CheckStatus
    detail: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != CheckStatus.FAIL

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "family": self.family,
            "status": self.status.value,
            "detail": dict(self.detail),
        }


def check_pass(
    name: str, family: str, detail: dict[str, str] | None = None
) -> CheckResult:
    return CheckResult(name, family, CheckStatus.PASS, detail or {})


def check_fail(
    name: str, family: str, detail: dict[str, str] | None = None
) -> CheckResult:
    return CheckResult(name, family, CheckStatus.FAIL, detail or {})


def check_skipped(name: str, family: str, reason: str) -> CheckResult:
    return CheckResult(name, family, CheckStatus.SKIPPED, {"reason": reason})


def check_from_error(name: str, family: str, error: VerificationError) -> CheckResult:
    """
    A failed check carrying the message and residual data of an error.
    """
    detail = {"error": type(error).__name__, "message": str(error)}
    detail.update(error.detail)
    return CheckResult(name, family, CheckStatus.FAIL, detail)
