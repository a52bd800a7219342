"""
Hahn polynomials Q_k(l) and Hahn rational functions U_k(l; a, c, N) as
terminating 3F2 series at unit argument.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from leonard_trio_lab.algebra.params import ParamSet
from leonard_trio_lab.errors import IdentityFailure
from leonard_trio_lab.exact.kernels import (
    Hyp3F2Spec,
    hyp3f2_unit,
    minus_one_power,
    pochhammer,
)
from leonard_trio_lab.exact.rational import Rational, RationalLike, format_rational


@dataclass(frozen=True, slots=True)
class HahnParams:
    """
    :cvar a: Shared by both families.
    :cvar n: The top index N.
    :cvar rho: Needed by the polynomials Q_k.
    :cvar c: Needed by the rational functions U_k.
    """

    a: Rational
    n: int
    rho: Rational | None = None
    c: Rational | None = None

    @classmethod
    def from_params(cls, params: ParamSet) -> "HahnParams":
        return cls(params.a, params.n, params.rho, params.c)


def hahn_Q(k: int, ell: int, p: HahnParams) -> Rational:
    """
    Q_k(l) = 3F2(-k, -l, k+2a-1; a+rho, -N; 1), summed to min(k, l).

    :param k: Degree index, 0 <= k <= N.
    :param ell: Variable, 0 <= l <= N.
    :param p: Parameters with rho.
    :return: The exact value.
    :raises DenominatorVanishes: If a lower Pochhammer vanishes in range.
    """
    assert 0 <= k <= p.n and 0 <= ell <= p.n, f"Indices ({k}, {ell}) exceed {p.n}"
    assert p.rho is not None, "Hahn polynomials need rho"
    spec = Hyp3F2Spec(
        upper=(Fraction(-k), Fraction(-ell), k + 2 * p.a - 1),
        lower=(p.a + p.rho, Fraction(-p.n)),
        termination_index=min(k, ell),
    )
    return hyp3f2_unit(spec)


def rational_U(
    k: int, ell: int, a: RationalLike, c: RationalLike, n: int
) -> Rational:
    """
    U_k(l; a, c, N) = 3F2(-k, -l, k+2a-1; a-c-l, -N; 1), summed to min(k, l).

    The lower parameter a-c-l depends on l, which makes U_k rational in l.
    The variable l may exceed N; the series still terminates at k.

    :param k: Degree index, 0 <= k <= N.
    :param ell: Variable, a natural number.
    :return: The exact value.
    :raises DenominatorVanishes: If a-c-l+j = 0 for some j < min(k, l).
    """
    assert 0 <= k <= n and ell >= 0, f"Indices ({k}, {ell}) invalid for N = {n}"
    a, c = Fraction(a), Fraction(c)
    spec = Hyp3F2Spec(
        upper=(Fraction(-k), Fraction(-ell), k + 2 * a - 1),
        lower=(a - c - ell, Fraction(-n)),
        termination_index=min(k, ell),
    )
    return hyp3f2_unit(spec)


def cleared_numerator(
    k: int, ell: int, a: RationalLike, c: RationalLike, n: int
) -> Rational:
    """
    U_k(l; a, c, N) (a-c-l)_k, summed without dividing by the l-dependent
    lower Pochhammer symbol, so it is defined for every natural l.
    """
    a, c = Fraction(a), Fraction(c)
    total = Fraction(0)
    for j in range(min(k, ell) + 1):
        term = (
            pochhammer(-k, j) * pochhammer(-ell, j) * pochhammer(k + 2 * a - 1, j)
        ) / (pochhammer(-n, j) * factorial(j))
        total += term * pochhammer(a - c - ell + j, k - j)
    return total


def finite_difference(values: list[Rational]) -> Rational:
    """
    The finite difference of order len(values) - 1 at the first point.
    """
    m = len(values) - 1
    return sum(
        (minus_one_power(m - i) * comb(m, i) * v for i, v in enumerate(values)),
        Fraction(0),
    )


def check_cleared_numerator(k: int, a: RationalLike, c: RationalLike, n: int) -> None:
    """
    The cleared numerator of U_k is a polynomial in l of degree at most 2k:
    its finite difference of order 2k + 1 over l = k..3k+1 vanishes.

    :raises IdentityFailure: If the difference is nonzero.
    """
    values = [cleared_numerator(k, ell, a, c, n) for ell in range(k, 3 * k + 2)]
    diff = finite_difference(values)
    if diff != 0:
        raise IdentityFailure(
            f"Cleared numerator of U_{k} is not a polynomial of degree <= {2 * k}",
            {"k": str(k), "difference": format_rational(diff)},
        )
