"""
Concrete realizations of the meta and trio Hahn algebras as difference
operators on C_N[x], and of the Jacobi algebra as differential operators.
"""

from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

from leonard_trio_lab.algebra.params import (
    CentralValues,
    ParamKind,
    ParamSet,
    central_values,
    check_generic,
)
from leonard_trio_lab.errors import WrongKind
from leonard_trio_lab.exact.rational import Rational
from leonard_trio_lab.polyspace.operator import Operator
from leonard_trio_lab.polyspace.poly import Poly
from leonard_trio_lab.tracing import trace_realize

Action = Callable[[Poly], Poly]

# the jacobi Z raises degree; its operators live on C_{N+JACOBI_PAD}[x]
JACOBI_PAD = 2


@dataclass(frozen=True, slots=True)
class OperatorSet:
    """
    The operators of one realization.

    :cvar params: The parameters the operators were built from.
    :cvar V: Present for every kind.
    :cvar Z: Present for every kind.
    :cvar X: Absent for the jacobi kind.
    :cvar Vt: The operator V-tilde, absent for the jacobi kind.
    :cvar Zinv: The inverse of Z, absent for the jacobi kind.
    :cvar K1: Present when rho is given (standard and general kinds).
    :cvar K2: Equal to V whenever K1 is present.
    :cvar exact_columns: Residuals are exact on the first exact_columns
        columns; smaller than the dimension only on a padded workspace.
    """

    params: ParamSet
    V: Operator
    Z: Operator
    X: Operator | None = None
    Vt: Operator | None = None
    Zinv: Operator | None = None
    K1: Operator | None = None
    K2: Operator | None = None
    exact_columns: int = 0

    def require(self, *names: str) -> tuple[Operator, ...]:
        """
        Fetch operators by field name.

        :raises WrongKind: If one of them is absent for this realization.
        """
        out = []
        for name in names:
            op = getattr(self, name)
            if op is None:
                raise WrongKind(
                    f"Operator {name} is not part of the "
                    f"{self.params.kind.value} realization"
                    + ("" if self.params.has_rho else " without rho")
                )
            out.append(op)
        return tuple(out)

    def names(self) -> list[str]:
        fields = ("V", "Z", "X", "Vt", "Zinv", "K1", "K2")
        return [f for f in fields if getattr(self, f) is not None]


def _x_plus(h: Rational | int, cap: int) -> Poly:
    return Poly.linear(1, h, cap)


def _forward(p: Poly) -> Poly:
    return p.shift(1)


def _backward(p: Poly) -> Poly:
    return p.shift(-1)


def _build(action: Action, n: int, name: str) -> Operator:
    return Operator.from_action(action, n, name)


def _shift_operators(n: int) -> tuple[Operator, Operator]:
    z = _build(lambda p: -_backward(p), n, "Z")
    z_inv = _build(lambda p: -_forward(p), n, "Zinv")
    return z, z_inv


def _realize_standard(params: ParamSet) -> OperatorSet:
    a, c, n = params.a, params.get_c(), params.n
    cap = n + 2

    def v(p: Poly) -> Poly:
        up = _x_plus(a, cap) * _x_plus(1 - a - n, cap) * _forward(p)
        return up - _x_plus(0, cap) * _x_plus(1, cap) * p

    def vt(p: Poly) -> Poly:
        return _x_plus(c, cap) * _forward(p) - _x_plus(0, cap) * p

    def x_op(p: Poly) -> Poly:
        return _x_plus(0, cap) * _backward(p) - _x_plus(c, cap) * p

    z, z_inv = _shift_operators(n)
    big_v = _build(v, n, "V")
    k1 = None
    if params.rho is not None:
        rho = params.rho

        def k1_action(p: Poly) -> Poly:
            hop = _x_plus(-rho, cap) * (_backward(p) - p)
            return hop + p.scale((n - rho) / 2)

        k1 = _build(k1_action, n, "K1")
    return OperatorSet(
        params=params,
        V=big_v,
        Z=z,
        X=_build(x_op, n, "X"),
        Vt=_build(vt, n, "Vt"),
        Zinv=z_inv,
        K1=k1,
        K2=big_v.named("K2") if k1 is not None else None,
        exact_columns=n + 1,
    )


def _realize_general(params: ParamSet) -> OperatorSet:
    a, b, c, n = params.a, params.get_b(), params.get_c(), params.n
    sigma = (n + a + b - 1) / 2
    cap = n + 2

    def v(p: Poly) -> Poly:
        up = _x_plus(a, cap) * _x_plus(b, cap) * _forward(p)
        return up - _x_plus(sigma, cap) * _x_plus(sigma + 1, cap) * p

    def vt(p: Poly) -> Poly:
        return _x_plus(c, cap) * _forward(p) - _x_plus(sigma, cap) * p

    def x_op(p: Poly) -> Poly:
        return _x_plus(sigma, cap) * _backward(p) - _x_plus(c, cap) * p

    z, z_inv = _shift_operators(n)
    big_v = _build(v, n, "V")
    big_x = _build(x_op, n, "X")
    k1 = None
    if params.rho is not None:
        rho = params.rho
        eta = central_values(params).eta
        k1 = (big_x + rho * z).plus_scalar((eta + rho) / 2).named("K1")
    return OperatorSet(
        params=params,
        V=big_v,
        Z=z,
        X=big_x,
        Vt=_build(vt, n, "Vt"),
        Zinv=z_inv,
        K1=k1,
        K2=big_v.named("K2") if k1 is not None else None,
        exact_columns=n + 1,
    )


def _realize_jacobi(params: ParamSet) -> OperatorSet:
    a, b, n = params.a, params.get_b(), params.n
    size = n + JACOBI_PAD
    cap = size + 2
    # shift making the second Jacobi relation hold with 2 xi = (b^2 - a^2)/2
    kappa = -(a + b) * (a + b + 2) / 4
    one_minus_x2 = Poly.from_coeffs([1, 0, -1], cap)
    drift = Poly.linear(-(a + b + 2), b - a, cap)

    def v(p: Poly) -> Poly:
        d1 = p.derivative()
        return one_minus_x2 * d1.derivative() + drift * d1 + p.scale(kappa)

    def z(p: Poly) -> Poly:
        return (_x_plus(-1, cap) * p).scale(Fraction(1, 2))

    return OperatorSet(
        params=params,
        V=_build(v, size, "V"),
        Z=Operator.from_action(z, size, "Z", truncate=True),
        exact_columns=n + 1,
    )


_REALIZERS: dict[ParamKind, Callable[[ParamSet], OperatorSet]] = {
    ParamKind.STANDARD: _realize_standard,
    ParamKind.GENERAL: _realize_general,
    ParamKind.JACOBI: _realize_jacobi,
}


def realize(params: ParamSet) -> tuple[OperatorSet, CentralValues]:
    """
    Build the operators of a realization and its central values.

    Every operator is tabulated on a workspace of degree N + 2 and checked to
    map C_N[x] into itself before truncation. The jacobi kind works on
    C_{N+2}[x] instead, since its Z raises degree; residuals built from it are
    exact on the columns of x^0..x^N only.

    :param params: The parameter set.
    :return: The operators and the central values.
    :raises NonGenericParams: If the genericity predicate fails.
    :raises ClosureViolation: If an operator leaves the polynomial space.
    """
    check_generic(params)
    ops = _REALIZERS[params.kind](params)
    trace_realize(
        params.kind.value,
        params.n,
        ops.names(),
        source="realize",
        run_id=params.label(),
    )
    return ops, central_values(params)
