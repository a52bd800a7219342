"""
Polynomials over the rationals in the monomial basis, with a working degree
bound (the cap).
"""

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from leonard_trio_lab.errors import CapExceeded, DegreeMismatch
from leonard_trio_lab.exact.rational import Rational, RationalLike, format_rational

# degree reported for the zero polynomial
ZERO_DEGREE = -1


@dataclass(frozen=True, slots=True)
class Poly:
    """
    A polynomial of degree at most ``cap``.

    :cvar coeffs: The coefficients, index j holding the coefficient of x^j.
        Its length is always cap + 1; trailing coefficients may be zero.
    """

    coeffs: tuple[Rational, ...]

    def __post_init__(self) -> None:
        assert len(self.coeffs) > 0, "A polynomial needs at least one coefficient"

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[RationalLike], cap: int) -> "Poly":
        """
        Build a polynomial from its coefficients, padding with zeros up to cap.

        :param coeffs: Coefficients of x^0, x^1, ...
        :param cap: The maximum representable degree.
        :return: The polynomial.
        :raises CapExceeded: If a nonzero coefficient lies above cap.
        """
        values = [Fraction(c) for c in coeffs]
        if any(v != 0 for v in values[cap + 1 :]):
            raise CapExceeded(f"Polynomial of degree >= {cap + 1} exceeds cap {cap}")
        values = values[: cap + 1]
        values.extend(Fraction(0) for _ in range(cap + 1 - len(values)))
        return cls(tuple(values))

    @classmethod
    def zero(cls, cap: int) -> "Poly":
        return cls(tuple(Fraction(0) for _ in range(cap + 1)))

    @classmethod
    def constant(cls, value: RationalLike, cap: int) -> "Poly":
        return cls.from_coeffs([value], cap)

    @classmethod
    def monomial(cls, j: int, cap: int) -> "Poly":
        """
        The monomial x^j.
        """
        if j > cap:
            raise CapExceeded(f"Monomial x^{j} exceeds cap {cap}")
        return cls.from_coeffs([0] * j + [1], cap)

    @classmethod
    def linear(cls, slope: RationalLike, offset: RationalLike, cap: int) -> "Poly":
        """
        The polynomial slope * x + offset.
        """
        return cls.from_coeffs([offset, slope], cap)

    @property
    def cap(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        for j in range(self.cap, -1, -1):
            if self.coeffs[j] != 0:
                return j
        return ZERO_DEGREE

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def with_cap(self, cap: int) -> "Poly":
        """
        The same polynomial with a different cap.

        :raises CapExceeded: If the degree exceeds the new cap.
        """
        return Poly.from_coeffs(self.coeffs, cap)

    def __add__(self, other: "Poly") -> "Poly":
        cap = max(self.cap, other.cap)
        a = self.with_cap(cap).coeffs
        b = other.with_cap(cap).coeffs
        return Poly(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def scale(self, factor: RationalLike) -> "Poly":
        f = Fraction(factor)
        return Poly(tuple(f * c for c in self.coeffs))

    def __mul__(self, other: "Poly") -> "Poly":
        """
        Polynomial product; the cap of the result is the larger of the caps.

        :raises CapExceeded: If the product does not fit.
        """
        cap = max(self.cap, other.cap)
        da, db = self.degree, other.degree
        if da == ZERO_DEGREE or db == ZERO_DEGREE:
            return Poly.zero(cap)
        if da + db > cap:
            raise CapExceeded(f"Product of degree {da + db} exceeds cap {cap}")
        out = [Fraction(0)] * (cap + 1)
        for i in range(da + 1):
            ci = self.coeffs[i]
            if ci == 0:
                continue
            for j in range(db + 1):
                out[i + j] += ci * other.coeffs[j]
        return Poly(tuple(out))

    def shift(self, h: RationalLike) -> "Poly":
        """
        The translate x -> p(x + h), by Horner's scheme.
        """
        step = Fraction(h)
        out = [Fraction(0)] * (self.cap + 1)
        for c in reversed(self.coeffs[: max(self.degree, 0) + 1]):
            # out <- out * (x + step) + c
            for i in range(self.cap, 0, -1):
                out[i] = out[i - 1] + step * out[i]
            out[0] = step * out[0] + c
        return Poly(tuple(out))

    def derivative(self) -> "Poly":
        out = [j * self.coeffs[j] for j in range(1, self.cap + 1)]
        return Poly.from_coeffs(out, self.cap)

    def __call__(self, x: RationalLike) -> Rational:
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def vector(self, n: int) -> list[Rational]:
        """
        Coordinates in the monomial basis of the degree <= n space.

        :raises DegreeMismatch: If the degree exceeds n.
        """
        if self.degree > n:
            raise DegreeMismatch(
                f"Polynomial of degree {self.degree} is not in C_{n}[x]"
            )
        return list(self.with_cap(n).coeffs)

    def __str__(self) -> str:
        terms = [
            f"{format_rational(c)}*x^{j}" for j, c in enumerate(self.coeffs) if c != 0
        ]
        return " + ".join(terms) if terms else "0"


def poch_poly(shift: RationalLike, n: int, negate_x: bool, cap: int) -> Poly:
    """
    Coefficients of the Pochhammer polynomial (x + shift)_n, or of
    (shift - x)_n when ``negate_x`` is set.

    :param shift: The constant offset.
    :param n: The length of the rising factorial.
    :param negate_x: Use -x in place of x.
    :param cap: The cap of the returned polynomial.
    :return: The polynomial.
    :raises CapExceeded: If n > cap.
    """
    if n > cap:
        raise CapExceeded(f"Pochhammer polynomial of degree {n} exceeds cap {cap}")
    slope = -1 if negate_x else 1
    result = Poly.constant(1, cap)
    for i in range(n):
        result = result * Poly.linear(slope, Fraction(shift) + i, cap)
    return result
