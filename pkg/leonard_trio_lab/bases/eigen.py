"""
Eigenvalue, generalized eigenvalue and band-action checks on the
distinguished bases.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from leonard_trio_lab.algebra.params import ParamSet
from leonard_trio_lab.algebra.realization import OperatorSet
from leonard_trio_lab.bases.context import BasisContext
from leonard_trio_lab.errors import CoefficientMismatch, EigenMismatch, WrongKind
from leonard_trio_lab.exact.rational import Rational, format_rational
from leonard_trio_lab.polyspace import matrix as mx
from leonard_trio_lab.polyspace.basis import BasisKind
from leonard_trio_lab.polyspace.matrix import Matrix
from leonard_trio_lab.polyspace.operator import apply


@dataclass(frozen=True, slots=True)
class EigenData:
    """
    :cvar basis_kind: The basis whose members are (generalized) eigenvectors.
    :cvar operator_name: The operator, or "X|Z" for the generalized problem.
    :cvar eigenvalues: The eigenvalue of each member, in order.
    """

    basis_kind: BasisKind
    operator_name: str
    eigenvalues: tuple[Rational, ...]

    def is_multiplicity_free(self) -> bool:
        return len(set(self.eigenvalues)) == len(self.eigenvalues)


def expected_eigenvalues(kind: BasisKind, params: ParamSet) -> tuple[Rational, ...]:
    """
    Closed-form eigenvalues: (1-a-k)(a+k) for V on a, k+c for Vt on b,
    (N-rho)/2-k for K1 on c, and k+c for the generalized problem
    X d_k = mu_k Z d_k.
    """
    a, n = params.a, params.n
    ks = range(n + 1)
    if kind == BasisKind.A:
        return tuple((1 - a - k) * (a + k) for k in ks)
    if kind in (BasisKind.B, BasisKind.D):
        c = params.get_c()
        return tuple(k + c for k in ks)
    if kind == BasisKind.C:
        rho = params.get_rho()
        return tuple((n - rho) / 2 - k for k in ks)
    raise WrongKind(f"The {kind.value}-basis is not an eigenbasis")


def eigen_check(
    kind: BasisKind,
    params: ParamSet,
    ops: OperatorSet | BasisContext | None = None,
) -> EigenData:
    """
    Verify that every member of a basis is an eigenvector with the closed-form
    eigenvalue; for the d-basis verify the generalized problem
    X d_k = (k + c) Z d_k instead.

    :param kind: One of the a, b, c and d bases.
    :param params: Standard-kind parameters.
    :param ops: A prebuilt realization of the same parameters, or a context
        sharing its bases.
    :return: The eigenvalues.
    :raises EigenMismatch: With the first offending index and its residual, or
        if two eigenvalues coincide.
    :raises WrongKind: For the split and monomial bases.
    """
    ctx = BasisContext.of(params, ops)
    ops = ctx.ops
    values = expected_eigenvalues(kind, params)
    basis = ctx.basis(kind)
    if kind == BasisKind.D:
        x, z = ops.require("X", "Z")
        name = "X|Z"
    else:
        name = {BasisKind.A: "V", BasisKind.B: "Vt", BasisKind.C: "K1"}[kind]
        (op,) = ops.require(name)

    for k, (member, value) in enumerate(zip(basis.members, values)):
        if kind == BasisKind.D:
            residual = apply(x, member) - apply(z, member).scale(value)
        else:
            residual = apply(op, member) - member.scale(value)
        if not residual.is_zero():
            raise EigenMismatch(
                f"{name} on the {kind.value}-basis fails at index {k}",
                {
                    "index": str(k),
                    "eigenvalue": format_rational(value),
                    "residual": str(residual),
                },
            )
    data = EigenData(kind, name, values)
    if not data.is_multiplicity_free():
        raise EigenMismatch(
            f"{name} on the {kind.value}-basis has a repeated eigenvalue",
            {"eigenvalues": ", ".join(format_rational(v) for v in values)},
        )
    return data


def compare_matrix(label: str, got: Matrix, expected: Matrix) -> None:
    """
    :raises CoefficientMismatch: At the first entry where the matrices differ.
    """
    hit = mx.first_difference(got, expected)
    if hit is None:
        return
    i, j, g, e = hit
    raise CoefficientMismatch(
        f"{label}: coefficient of member {i} in the image of member {j} differs",
        {
            "row": str(i),
            "column": str(j),
            "computed": format_rational(g),
            "closed_form": format_rational(e),
        },
    )


def _banded(
    n: int,
    diagonal: list[Rational],
    lower: list[Rational] | None = None,
    upper: list[Rational] | None = None,
) -> Matrix:
    """
    lower[k] is the entry [k+1][k], upper[k] the entry [k-1][k] (index 0
    unused).
    """
    m = mx.diagonal(diagonal)
    for k in range(n + 1):
        if lower is not None and k < n:
            m[k + 1, k] = Fraction(lower[k])
        if upper is not None and k > 0:
            m[k - 1, k] = Fraction(upper[k])
    return m


@dataclass(frozen=True, slots=True)
class BidiagonalData:
    """
    Coefficients of the split-basis actions
    K1 s_k = k1_diagonal[k] s_k + k1_upper[k] s_{k-1} and
    V s_k = v_diagonal[k] s_k + v_lower[k] s_{k+1}.
    """

    k1_diagonal: tuple[Rational, ...]
    k1_upper: tuple[Rational, ...]
    v_diagonal: tuple[Rational, ...]
    v_lower: tuple[Rational, ...]


def bidiagonal_check(
    params: ParamSet, ops: OperatorSet | BasisContext | None = None
) -> BidiagonalData:
    """
    Verify that K1 and V act bidiagonally on the split basis s_k = (x+a)_k:
    K1 s_k = ((N-rho)/2-k) s_k + k(k-1+a+rho) s_{k-1} and
    V s_k = (1-a-k)(k+a) s_k + (k-N) s_{k+1}.

    :return: The coefficients extracted from the realization.
    :raises CoefficientMismatch: With the index and both values.
    """
    ctx = BasisContext.of(params, ops)
    a, n, rho = params.a, params.n, params.get_rho()
    ks = range(n + 1)

    k1_in_s = ctx.matrix("K1", BasisKind.S)
    compare_matrix(
        "K1 on the s-basis",
        k1_in_s,
        _banded(
            n,
            [(n - rho) / 2 - k for k in ks],
            upper=[k * (k - 1 + a + rho) for k in ks],
        ),
    )
    v_in_s = ctx.matrix("V", BasisKind.S)
    compare_matrix(
        "V on the s-basis",
        v_in_s,
        _banded(
            n,
            [(1 - a - k) * (k + a) for k in ks],
            lower=[Fraction(k - n) for k in ks],
        ),
    )
    return BidiagonalData(
        k1_diagonal=tuple(k1_in_s[k, k] for k in ks),
        k1_upper=tuple(Fraction(0) if k == 0 else k1_in_s[k - 1, k] for k in ks),
        v_diagonal=tuple(v_in_s[k, k] for k in ks),
        v_lower=tuple(Fraction(0) if k == n else v_in_s[k + 1, k] for k in ks),
    )


class TridiagFamily(str, Enum):
    """
    The closed-form three-term actions.
    """

    Z_ON_A = "Z on a"
    VTZ_ON_A = "Vt Z on a"
    K1_ON_A = "K1 on a"
    V_ON_C = "V on c"
    Z_ON_B = "Z on b"
    ZV_ON_B = "Z V on b"

    @property
    def needs_rho(self) -> bool:
        return self in (TridiagFamily.K1_ON_A, TridiagFamily.V_ON_C)

    @property
    def word(self) -> str:
        """
        The acting operator product, e.g. "Vt Z".
        """
        return self.value.split(" on ")[0]


def _a_steps(params: ParamSet) -> tuple[list[Rational], list[Rational]]:
    """
    The coefficients A_k of (a_{k+1} - a_k) and B_k of (a_{k-1} - a_k) in
    Z a_k = A_k (a_{k+1} - a_k) - a_k - B_k (a_{k-1} - a_k).
    """
    a, n = params.a, params.n
    big_a = [
        (n - k) * (2 * a + k - 1) / (2 * (k + a) * (2 * a + 2 * k - 1))
        for k in range(n + 1)
    ]
    # B_0 multiplies a_{-1} and vanishes; its denominator may not
    big_b = [Fraction(0)] + [
        k * (2 * a + n + k - 1) / (2 * (k + a - 1) * (2 * a + 2 * k - 1))
        for k in range(1, n + 1)
    ]
    return big_a, big_b


def _a_action(
    n: int,
    up: list[Rational],
    centre: Rational,
    down: list[Rational],
) -> Matrix:
    """
    Matrix of op a_k = up_k (a_{k+1} - a_k) + centre a_k + down_k (a_{k-1} - a_k).
    """
    diagonal = [centre - up[k] - down[k] for k in range(n + 1)]
    return _banded(n, diagonal, lower=up, upper=down)


def tridiag_closed_form(family: TridiagFamily, params: ParamSet) -> Matrix:
    """
    The closed-form matrix of a three-term action, column k holding the
    coefficients of the image of member k.
    """
    a, n = params.a, params.n
    ks = range(n + 1)
    if family == TridiagFamily.Z_ON_B:
        return _banded(n, [Fraction(-1)] * (n + 1), upper=[Fraction(k) for k in ks])
    if family == TridiagFamily.ZV_ON_B:
        c = params.get_c()
        return _banded(
            n,
            [(k + c) * (2 * k - n) + (a - 1) * (a + n) for k in ks],
            lower=[Fraction(n - k) for k in ks],
            upper=[-k * (k + c - 1) * (k + c) for k in ks],
        )
    if family == TridiagFamily.V_ON_C:
        rho = params.get_rho()
        return _banded(
            n,
            [
                (k - n) * (k + a + rho) + k * (k + rho - a - n) - a * (a - 1)
                for k in ks
            ],
            lower=[Fraction(n - k) for k in ks],
            upper=[-k * (k + a + rho - 1) * (k + rho - a - n) for k in ks],
        )

    big_a, big_b = _a_steps(params)
    if family == TridiagFamily.Z_ON_A:
        return _a_action(n, big_a, Fraction(-1), [-b for b in big_b])
    if family == TridiagFamily.VTZ_ON_A:
        c = params.get_c()
        return _a_action(
            n,
            [-(k + a) * big_a[k] for k in ks],
            -(n + c),
            [-(k + a - 1) * big_b[k] for k in ks],
        )
    rho = params.get_rho()
    return _a_action(
        n,
        [-(k + a - rho) * big_a[k] for k in ks],
        -(n + rho) / 2,
        [-(k + a + rho - 1) * big_b[k] for k in ks],
    )


_FAMILY_BASIS = {
    TridiagFamily.Z_ON_A: BasisKind.A,
    TridiagFamily.VTZ_ON_A: BasisKind.A,
    TridiagFamily.K1_ON_A: BasisKind.A,
    TridiagFamily.V_ON_C: BasisKind.C,
    TridiagFamily.Z_ON_B: BasisKind.B,
    TridiagFamily.ZV_ON_B: BasisKind.B,
}


def tridiag_coeff_check(
    params: ParamSet,
    families: list[TridiagFamily] | None = None,
    ops: OperatorSet | BasisContext | None = None,
) -> list[TridiagFamily]:
    """
    Compare the three-term actions of Z, Vt Z, K1 on the a-basis, of V on the
    c-basis and of Z, ZV on the b-basis with their closed forms, entry by
    entry.

    :param params: Standard-kind parameters.
    :param families: The actions to check; all applicable ones by default
        (those needing rho are left out when rho is absent).
    :param ops: A prebuilt realization of the same parameters, or a context
        sharing its bases.
    :return: The families that were checked.
    :raises CoefficientMismatch: At the first differing coefficient.
    """
    ctx = BasisContext.of(params, ops)
    if families is None:
        families = [f for f in TridiagFamily if params.has_rho or not f.needs_rho]
    for family in families:
        got = ctx.matrix(family.word, _FAMILY_BASIS[family])
        compare_matrix(family.value, got, tridiag_closed_form(family, params))
    return families
