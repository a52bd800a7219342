"""
Matrix forms of the recurrence, difference equation and generalized
eigenvalue problems satisfied by the connection coefficients.

A connection matrix G for "from->to" intertwines representations:
G [A]_from = [A]_to G for every operator A.
"""

from collections.abc import Mapping
from enum import Enum

from leonard_trio_lab.algebra.params import ParamSet
from leonard_trio_lab.algebra.realization import OperatorSet
from leonard_trio_lab.bases.context import BasisContext
from leonard_trio_lab.bases.eigen import expected_eigenvalues
from leonard_trio_lab.errors import IdentityFailure
from leonard_trio_lab.exact.rational import format_rational
from leonard_trio_lab.polyspace import matrix as mx
from leonard_trio_lab.polyspace.basis import BasisKind
from leonard_trio_lab.polyspace.matrix import Matrix
from leonard_trio_lab.specialfn.connection import (
    ConnectionKind,
    closed_form_connection,
)


class BispectralSide(str, Enum):
    """
    :cvar POLYNOMIAL: Hahn polynomials, through the a->c connection.
    :cvar RATIONAL: Hahn rational functions, through the a->b connection.
    """

    POLYNOMIAL = "polynomial"
    RATIONAL = "rational"


def _intertwines(label: str, lhs: Matrix, rhs: Matrix) -> None:
    hit = mx.first_difference(lhs, rhs)
    if hit is not None:
        i, j, left, right = hit
        raise IdentityFailure(
            f"Conjugation {label} fails at [{i}][{j}]",
            {
                "conjugation": label,
                "row": str(i),
                "column": str(j),
                "lhs": format_rational(left),
                "rhs": format_rational(right),
            },
        )


def _polynomial_side(ctx: BasisContext, g: Matrix) -> list[str]:
    params = ctx.params
    k1_a = ctx.matrix("K1", BasisKind.A)
    lambda_a = mx.diagonal(expected_eigenvalues(BasisKind.A, params))
    mu_c = mx.diagonal(expected_eigenvalues(BasisKind.C, params))
    v_c = ctx.matrix("V", BasisKind.C)
    # recurrence in the degree of Q_k
    _intertwines("G [K1]_a = diag(mu) G", g @ k1_a, mu_c @ g)
    # difference equation in the variable of Q_k
    _intertwines("G diag(lambda) = [V]_c G", g @ lambda_a, v_c @ g)
    return ["G [K1]_a = diag(mu) G", "G diag(lambda) = [V]_c G"]


def _rational_side(ctx: BasisContext, g: Matrix) -> list[str]:
    z_a = ctx.matrix("Z", BasisKind.A)
    z_b = ctx.matrix("Z", BasisKind.B)
    vt_b = ctx.matrix("Vt", BasisKind.B)
    vtz_a = ctx.matrix("Vt Z", BasisKind.A)
    zv_b = ctx.matrix("Z V", BasisKind.B)
    lambda_a = mx.diagonal(expected_eigenvalues(BasisKind.A, ctx.params))
    checks = [
        ("G' [Z]_a = [Z]_b G'", g @ z_a, z_b @ g),
        ("G' [Vt Z]_a = [Vt]_b [Z]_b G'", g @ vtz_a, vt_b @ z_b @ g),
        ("G' [Z]_a diag(lambda) = [Z V]_b G'", g @ z_a @ lambda_a, zv_b @ g),
    ]
    for label, lhs, rhs in checks:
        _intertwines(label, lhs, rhs)
    return [label for label, _, _ in checks]


def bispectral_consistency(
    params: ParamSet,
    sides: list[BispectralSide] | None = None,
    ops: OperatorSet | BasisContext | None = None,
    connections: Mapping[ConnectionKind, Matrix] | None = None,
) -> list[str]:
    """
    Verify that the closed-form connection matrices intertwine the tridiagonal
    and diagonal actions of the realized operators.

    The polynomial side transports K1 and V through the a->c matrix, which is
    the three-term recurrence and the difference equation of Q_k(l). The
    rational side transports Z, Vt Z and Z V through the a->b matrix G',
    which is the pair of generalized eigenvalue problems of U_k.

    :param params: Standard-kind parameters.
    :param sides: The sides to check; by default the polynomial side when rho
        is given and the rational side always.
    :param ops: A prebuilt realization of the same parameters, or a context
        sharing its bases.
    :param connections: Matrices to use in place of the closed forms of
        a->c and a->b, e.g. ones already verified.
    :return: The conjugations that hold.
    :raises IdentityFailure: Naming the first failing conjugation.
    """
    ctx = BasisContext.of(params, ops)
    connections = {} if connections is None else connections
    if sides is None:
        sides = [BispectralSide.RATIONAL]
        if params.has_rho:
            sides.insert(0, BispectralSide.POLYNOMIAL)
    passed: list[str] = []
    for side in sides:
        kind = (
            ConnectionKind.A_TO_C
            if side == BispectralSide.POLYNOMIAL
            else ConnectionKind.A_TO_B
        )
        g = connections.get(kind)
        if g is None:
            g = closed_form_connection(kind, params)
        if side == BispectralSide.POLYNOMIAL:
            passed += _polynomial_side(ctx, g)
        else:
            passed += _rational_side(ctx, g)
    return passed
