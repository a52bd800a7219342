"""
Parameter sets of the realizations, their central values and the genericity
predicate.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from leonard_trio_lab.errors import NonGenericParams
from leonard_trio_lab.exact.rational import Rational, format_rational


class ParamKind(str, Enum):
    """
    :cvar STANDARD: Difference operators with parameters (a, c, rho, N).
    :cvar GENERAL: Difference operators with parameters (a, b, c, rho, N).
    :cvar JACOBI: Differential operators with parameters (a, b, N).
    """

    STANDARD = "standard"
    GENERAL = "general"
    JACOBI = "jacobi"


_REQUIRED_FIELDS: dict[ParamKind, tuple[str, ...]] = {
    ParamKind.STANDARD: ("c",),
    ParamKind.GENERAL: ("b", "c"),
    ParamKind.JACOBI: ("b",),
}

_FORBIDDEN_FIELDS: dict[ParamKind, tuple[str, ...]] = {
    ParamKind.STANDARD: ("b",),
    ParamKind.GENERAL: (),
    ParamKind.JACOBI: ("c", "rho"),
}


@dataclass(frozen=True, slots=True)
class ParamSet:
    """
    A concrete choice of parameters.

    :cvar kind: The realization the parameters are meant for.
    :cvar n: The top degree N of the polynomial space.
    :cvar a: Always present.
    :cvar b: Present for the general and jacobi kinds.
    :cvar c: Present for the standard and general kinds.
    :cvar rho: Optional; needed by K1 and the c-basis.
    """

    kind: ParamKind
    n: int
    a: Rational
    b: Rational | None = None
    c: Rational | None = None
    rho: Rational | None = None

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"N must be a natural number, got {self.n!r}")
        for name in ("a", "b", "c", "rho"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, Fraction(value))
        present = {f for f in ("b", "c", "rho") if getattr(self, f) is not None}
        missing = [f for f in _REQUIRED_FIELDS[self.kind] if f not in present]
        if missing:
            raise ValueError(f"Kind {self.kind.value} requires {missing}")
        extra = [f for f in _FORBIDDEN_FIELDS[self.kind] if f in present]
        if extra:
            raise ValueError(f"Kind {self.kind.value} does not take {extra}")

    def get_b(self) -> Rational:
        assert self.b is not None, f"Kind {self.kind.value} has no b"
        return self.b

    def get_c(self) -> Rational:
        assert self.c is not None, f"Kind {self.kind.value} has no c"
        return self.c

    def get_rho(self) -> Rational:
        assert self.rho is not None, "Parameter set has no rho"
        return self.rho

    @property
    def has_rho(self) -> bool:
        return self.rho is not None

    def to_dict(self) -> dict[str, str | int]:
        """
        The serialized form, rationals as "p/q" strings and absent fields
        omitted.
        """
        out: dict[str, str | int] = {"kind": self.kind.value, "n": self.n}
        for name in ("a", "b", "c", "rho"):
            value = getattr(self, name)
            if value is not None:
                out[name] = format_rational(value)
        return out

    def label(self) -> str:
        parts = [f"{k}={v}" for k, v in self.to_dict().items() if k != "kind"]
        return f"{self.kind.value}(" + ", ".join(parts) + ")"


@dataclass(frozen=True, slots=True)
class CentralValues:
    """
    Scalar values of the central elements in a realization.

    :cvar eta: Central element of the meta and trio relations.
    :cvar xi: Central element of the meta relations.
    :cvar zeta: Central element of the trio relations.
    :cvar casimir_meta: The value Q of the meta Casimir.
    :cvar casimir_trio: The value C of the trio Casimir.
    """

    eta: Rational
    xi: Rational
    zeta: Rational
    casimir_meta: Rational
    casimir_trio: Rational


def central_values(params: ParamSet) -> CentralValues:
    """
    Central values of a realization.

    For the jacobi kind only xi is meaningful; the others are reported as 0.

    :param params: The parameter set.
    :return: The central values.
    """
    a, n = params.a, params.n
    if params.kind == ParamKind.STANDARD:
        c = params.get_c()
        return CentralValues(
            eta=2 * c + n,
            xi=(1 - a) * (a + n),
            zeta=(c - a) * (a + c + n - 1),
            casimir_meta=(a - c) * (a + c + n - 1),
            casimir_trio=(a - 1) * (a + n),
        )
    if params.kind == ParamKind.GENERAL:
        b, c = params.get_b(), params.get_c()
        return CentralValues(
            eta=2 * c - a - b + 1,
            xi=(a - b + 1 + n) * (b - a + 1 + n) / 4,
            zeta=(b - c) * (a - c),
            casimir_meta=(a - c) * (c - b),
            casimir_trio=(a - b + 1 + n) * (a - b - 1 - n) / 4,
        )
    b = params.get_b()
    zero = Fraction(0)
    return CentralValues(
        eta=zero,
        xi=(b * b - a * a) / 4,
        zeta=zero,
        casimir_meta=zero,
        casimir_trio=zero,
    )


def core_factors(params: ParamSet) -> list[tuple[str, Rational]]:
    """
    Denominator factors of the polynomial-side formulas: the Z and K1 actions
    on the a-basis, the Hahn polynomial connection coefficients, their
    orthogonality norms and the norms of the rational functions.

    Only the standard kind has such denominators.

    :return: (name, value) pairs; the parameters are generic iff none vanish.
    """
    if params.kind != ParamKind.STANDARD:
        return []
    a, n = params.a, params.n
    factors: list[tuple[str, Rational]] = [(f"a{m:+d}", a + m) for m in range(n + 1)]
    factors += [(f"2a{m:+d}", 2 * a + m) for m in range(-1, 2 * n + 1)]
    if params.rho is not None:
        rho = params.rho
        factors += [(f"a+rho{m:+d}", a + rho + m) for m in range(n + 1)]
        factors += [(f"a-rho{m:+d}", a - rho + m) for m in range(n + 1)]
    return factors


def rational_factors(params: ParamSet) -> list[tuple[str, Rational]]:
    """
    Denominator factors of the rational-function side: the lower parameters
    of U_k(l; a, c-1, N) and U_k(N-l; a, -c-N, N) and the weights W(l).
    """
    if params.kind != ParamKind.STANDARD:
        return []
    a, c, n = params.a, params.get_c(), params.n
    factors = [(f"a-c{-m:+d}", a - c - m) for m in range(n + 1)]
    factors += [(f"a+c{m:+d}", a + c + m) for m in range(n + 1)]
    return factors


def _vanishing(factors: list[tuple[str, Rational]]) -> list[str]:
    return [name for name, value in factors if value == 0]


def check_generic(params: ParamSet) -> None:
    """
    :raises NonGenericParams: If a core factor vanishes.
    """
    vanishing = _vanishing(core_factors(params))
    if vanishing:
        raise NonGenericParams(vanishing)


def is_rational_generic(params: ParamSet) -> bool:
    return not _vanishing(rational_factors(params))


def rational_vanishing(params: ParamSet) -> list[str]:
    return _vanishing(rational_factors(params))


def is_fully_generic(params: ParamSet) -> bool:
    """
    Both factor lists are free of zeros; the sweep sampler draws until this
    holds.
    """
    return not _vanishing(core_factors(params)) and is_rational_generic(params)
