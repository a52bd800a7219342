"""
Combinatorial kernels: Pochhammer symbols, generalized binomial coefficients
and terminating 3F2 series at unit argument.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from leonard_trio_lab.errors import DenominatorVanishes
from leonard_trio_lab.exact.rational import Rational, RationalLike, format_rational


def pochhammer(z: RationalLike, n: int) -> Rational:
    """
    Rising factorial (z)_n = z(z+1)...(z+n-1), with (z)_0 = 1.

    :param z: The base.
    :param n: The length of the product, a natural number.
    :return: The exact value of (z)_n.
    """
    assert n >= 0, "Pochhammer length must be a natural number"
    result = Fraction(1)
    base = Fraction(z)
    for i in range(n):
        result *= base + i
        if result == 0:
            break
    return result


def gen_binomial(z: RationalLike, k: int) -> Rational:
    """
    Generalized binomial coefficient z(z-1)...(z-k+1)/k!.

    :param z: The upper argument, any rational.
    :param k: The lower argument, a natural number.
    :return: The exact binomial coefficient.
    """
    assert k >= 0, "Binomial lower argument must be a natural number"
    return pochhammer(Fraction(z) - k + 1, k) / factorial(k)


@dataclass(frozen=True, slots=True)
class Hyp3F2Spec:
    """
    A terminating 3F2 series at unit argument.

    :cvar upper: The three upper parameters.
    :cvar lower: The two lower parameters.
    :cvar termination_index: The series is summed for j = 0..M, where -M is
        one of the upper parameters.
    """

    upper: tuple[Rational, Rational, Rational]
    lower: tuple[Rational, Rational]
    termination_index: int

    def __post_init__(self) -> None:
        # frozen dataclass: coerce through object.__setattr__
        object.__setattr__(self, "upper", tuple(Fraction(u) for u in self.upper))
        object.__setattr__(self, "lower", tuple(Fraction(b) for b in self.lower))
        assert self.termination_index >= 0, "Termination index must be natural"
        assert any(
            u == -self.termination_index for u in self.upper
        ), "Termination index must be -u for a non-positive integer upper u"


def hyp3f2_unit(spec: Hyp3F2Spec) -> Rational:
    """
    Sum the terminating series exactly.

    The j-th term is obtained from the previous one by the ratio
    prod(alpha_i + j) / (prod(beta_i + j) (j + 1)).

    :param spec: The series to sum.
    :return: The exact sum over j = 0..M.
    :raises DenominatorVanishes: If a lower Pochhammer symbol vanishes within
        the summation range.
    """
    a1, a2, a3 = spec.upper
    b1, b2 = spec.lower
    total = Fraction(1)
    term = Fraction(1)
    for j in range(spec.termination_index):
        denominator = (b1 + j) * (b2 + j)
        if denominator == 0:
            raise DenominatorVanishes(
                f"Lower parameters ({format_rational(b1)}, {format_rational(b2)}) "
                f"vanish at index {j} of a series terminating at "
                f"{spec.termination_index}"
            )
        term = term * (a1 + j) * (a2 + j) * (a3 + j) / (denominator * (j + 1))
        total += term
    return total


def minus_one_power(n: int) -> int:
    """
    (-1)^n for an integer n.
    """
    return -1 if n % 2 else 1
