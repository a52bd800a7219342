"""
Connection matrices between the distinguished bases, from closed forms, each
compared against an exact change-of-basis solve.

For a kind "from->to" the matrix G satisfies from_k = sum_l G[l][k] to_l.
"""

from collections.abc import Callable
from enum import Enum
from fractions import Fraction
from math import comb, factorial

from leonard_trio_lab.algebra.params import ParamSet, check_generic
from leonard_trio_lab.bases.context import BasisContext
from leonard_trio_lab.errors import OracleMismatch
from leonard_trio_lab.exact.kernels import minus_one_power, pochhammer
from leonard_trio_lab.exact.rational import Rational, format_rational
from leonard_trio_lab.polyspace import matrix as mx
from leonard_trio_lab.polyspace.basis import BasisKind
from leonard_trio_lab.polyspace.matrix import Matrix
from leonard_trio_lab.specialfn.hahn import HahnParams, hahn_Q, rational_U


class ConnectionKind(str, Enum):
    A_TO_C = "a->c"
    C_TO_A = "c->a"
    A_TO_B = "a->b"
    B_TO_A = "b->a"
    A_TO_S = "a->s"
    S_TO_C = "s->c"
    S_TO_B = "s->b"
    B_TO_S = "b->s"

    @property
    def source(self) -> BasisKind:
        return BasisKind(self.value[0])

    @property
    def target(self) -> BasisKind:
        return BasisKind(self.value[-1])

    @property
    def needs_rho(self) -> bool:
        return BasisKind.C in (self.source, self.target)

    @property
    def rational(self) -> bool:
        """
        Whether the coefficients carry Hahn rational functions.
        """
        return self in (ConnectionKind.A_TO_B, ConnectionKind.B_TO_A)


Entry = Callable[[ParamSet, int, int], Rational]


def _a_to_c(p: ParamSet, ell: int, k: int) -> Rational:
    a, n, rho = p.a, p.n, p.get_rho()
    prefactor = pochhammer(a + rho, k) * pochhammer(1 - a - n + rho, n - k)
    weight = pochhammer(-n, ell) / factorial(ell)
    weight /= pochhammer(1 - a - n + rho, ell)
    return prefactor * weight * hahn_Q(k, ell, HahnParams.from_params(p))


def _c_to_a(p: ParamSet, k: int, ell: int) -> Rational:
    a, n, rho = p.a, p.n, p.get_rho()
    numerator = minus_one_power(n) * pochhammer(a + rho, ell) * (2 * k + 2 * a - 1)
    numerator *= pochhammer(-n, k)
    denominator = factorial(k) * pochhammer(k + 2 * a - 1, n + 1)
    return numerator / denominator * hahn_Q(k, ell, HahnParams.from_params(p))


def _a_to_b(p: ParamSet, ell: int, k: int) -> Rational:
    a, c, n = p.a, p.get_c(), p.n
    weight = comb(n, ell) * pochhammer(1 - a - c - n, n - ell)
    return weight * rational_U(k, n - ell, a, -c - n, n)


def _b_to_a(p: ParamSet, k: int, ell: int) -> Rational:
    a, c, n = p.a, p.get_c(), p.n
    factor = minus_one_power(n) * pochhammer(c - a, ell) / pochhammer(2 * a, n)
    factor *= (1 - 2 * a - 2 * k) / (1 - 2 * a)
    factor *= pochhammer(-n, k) * pochhammer(2 * a - 1, k)
    factor /= factorial(k) * pochhammer(2 * a + n, k)
    return factor * rational_U(k, ell, a, c - 1, n)


def _a_to_s(p: ParamSet, i: int, k: int) -> Rational:
    if i < k:
        return Fraction(0)
    a, n = p.a, p.n
    sign = minus_one_power(i + n)
    return sign * comb(n - k, i - k) * pochhammer(k + 2 * a + i, n - i)


def _s_to_c(p: ParamSet, ell: int, i: int) -> Rational:
    a, rho = p.a, p.get_rho()
    sign = minus_one_power(ell)
    return sign * comb(i, ell) * pochhammer(ell + a + rho, max(i - ell, 0))


def _s_to_b(p: ParamSet, ell: int, i: int) -> Rational:
    return comb(i, ell) * pochhammer(p.a - p.get_c(), max(i - ell, 0))


def _b_to_s(p: ParamSet, i: int, ell: int) -> Rational:
    return comb(ell, i) * pochhammer(p.get_c() - p.a, max(ell - i, 0))


_ENTRIES: dict[ConnectionKind, Entry] = {
    ConnectionKind.A_TO_C: _a_to_c,
    ConnectionKind.C_TO_A: _c_to_a,
    ConnectionKind.A_TO_B: _a_to_b,
    ConnectionKind.B_TO_A: _b_to_a,
    ConnectionKind.A_TO_S: _a_to_s,
    ConnectionKind.S_TO_C: _s_to_c,
    ConnectionKind.S_TO_B: _s_to_b,
    ConnectionKind.B_TO_S: _b_to_s,
}


def closed_form_connection(kind: ConnectionKind, params: ParamSet) -> Matrix:
    """
    The connection matrix built entry by entry from its closed form; entry
    [row][col] is the coefficient of target member row in source member col.
    """
    check_generic(params)
    entry = _ENTRIES[kind]
    size = params.n + 1
    return mx.as_matrix(
        [[entry(params, row, col) for col in range(size)] for row in range(size)]
    )


def connection_matrix(
    kind: ConnectionKind, params: ParamSet, ctx: BasisContext | None = None
) -> Matrix:
    """
    Build a connection matrix from its closed form and check it against the
    exact change-of-basis matrix of the realized bases.

    :param kind: Which pair of bases.
    :param params: Standard-kind parameters; rho for the c-basis kinds.
    :param ctx: Bases already built for the same parameters.
    :return: The verified matrix.
    :raises OracleMismatch: At the first entry where the two matrices differ.
    :raises NonGenericParams: If the genericity predicate fails.
    :raises DenominatorVanishes: If a rational function of the closed form
        is undefined for the parameters.
    """
    closed = closed_form_connection(kind, params)
    ctx = BasisContext(params) if ctx is None else ctx
    oracle = ctx.change(kind.source, kind.target)
    hit = mx.first_difference(closed, oracle)
    if hit is not None:
        row, col, got, expected = hit
        raise OracleMismatch(
            f"Connection {kind.value} differs from the basis change at "
            f"[{row}][{col}]",
            {
                "row": str(row),
                "column": str(col),
                "closed_form": format_rational(got),
                "solve": format_rational(expected),
            },
        )
    return closed
