"""
Exceptions raised by the laboratory and the exit codes of the command line.

Verification failures carry a ``detail`` mapping whose values are exact
rationals rendered as strings, so that they can be copied verbatim into a
verification report.
"""

from enum import IntEnum


class ExitCode(IntEnum):
    """
    Exit codes of the command line front end.

    :cvar OK: Every check passed.
    :cvar CHECK_FAILED: At least one check failed.
    :cvar BAD_FLAGS: The command line could not be parsed.
    :cvar NON_GENERIC: The parameters violate the genericity predicate or a
        requested value has a vanishing denominator.
    """

    OK = 0
    CHECK_FAILED = 1
    BAD_FLAGS = 2
    NON_GENERIC = 3


class LabError(Exception):
    """
    Root of every error raised by the laboratory.
    """

    pass


class NonGenericParams(LabError):
    """
    A denominator factor of an in-scope formula vanishes for the parameters.

    :ivar factors: Names of the vanishing factors.
    """

    def __init__(self, factors: list[str]):
        self.factors = factors
        super().__init__(f"Non-generic parameters, vanishing factors: {factors}")


class CapExceeded(LabError):
    pass


class DegreeMismatch(LabError):
    pass


class DimensionMismatch(LabError):
    pass


class SingularBasis(LabError):
    pass


class DenominatorVanishes(LabError):
    """
    A lower Pochhammer symbol of a terminating series vanishes inside the
    summation range.
    """

    pass


class ClosureViolation(LabError):
    """
    An operator maps a polynomial of degree at most N outside the space.
    """

    pass


class WrongKind(LabError):
    pass


class ConfigError(LabError):
    pass


class VerificationError(LabError):
    """
    Base class for failed identities.

    :ivar detail: Exact residual data, values rendered as "p/q" strings.
    """

    def __init__(self, message: str, detail: dict[str, str] | None = None):
        self.detail: dict[str, str] = {} if detail is None else detail
        super().__init__(message)


class NotScalar(VerificationError):
    pass


class EigenMismatch(VerificationError):
    pass


class CoefficientMismatch(VerificationError):
    pass


class OracleMismatch(VerificationError):
    pass


class IdentityFailure(VerificationError):
    pass
