"""
Relation residuals of the meta, trio, Hahn and Jacobi algebras in a
realization, the Casimir checks and the meta/trio isomorphism.

Every residual is an operator that must vanish identically.
"""

from collections.abc import Callable, Mapping
from dataclasses import dataclass, replace
from enum import Enum

from leonard_trio_lab.algebra.params import CentralValues
from leonard_trio_lab.algebra.realization import OperatorSet
from leonard_trio_lab.checks import CheckResult, check_fail, check_pass
from leonard_trio_lab.errors import IdentityFailure, NotScalar
from leonard_trio_lab.exact.rational import Rational, format_rational
from leonard_trio_lab.polyspace import matrix as mx
from leonard_trio_lab.polyspace.operator import (
    Operator,
    anticommutator,
    commutator,
)


class ResidualFamily(str, Enum):
    META = "meta"
    TRIO = "trio"
    TRIO_DERIVED = "trio-derived"
    HAHN_EMBED = "hahn-embed"
    JACOBI = "jacobi"


class CasimirKind(str, Enum):
    META = "meta"
    TRIO = "trio"


@dataclass(frozen=True, slots=True)
class ResidualSet:
    """
    :cvar family: The relation family.
    :cvar residuals: (relation, residual operator) pairs.
    :cvar exact_columns: Only the first exact_columns columns are compared.
    """

    family: ResidualFamily
    residuals: tuple[tuple[str, Operator], ...]
    exact_columns: int

    def _first_nonzero(self, op: Operator) -> tuple[int, int, Rational] | None:
        m = op.matrix
        for j in range(self.exact_columns):
            for i in range(m.shape[0]):
                if m[i, j] != 0:
                    return i, j, m[i, j]
        return None

    def failing(self) -> list[str]:
        return [name for name, op in self.residuals if self._first_nonzero(op)]

    def passed(self) -> bool:
        return not self.failing()

    def detail(self) -> dict[str, str]:
        """
        The first nonzero entry of every failing residual.
        """
        out: dict[str, str] = {}
        for name, op in self.residuals:
            hit = self._first_nonzero(op)
            if hit is not None:
                i, j, value = hit
                out[f"{name} [{i}][{j}]"] = format_rational(value)
        return out


def _meta(ops: OperatorSet, cv: CentralValues) -> list[tuple[str, Operator]]:
    x, v, z = ops.require("X", "V", "Z")
    return [
        ("[Z,X] - Z^2 - Z", commutator(z, x) - z @ z - z),
        ("[V,Z] - 2X - eta", (commutator(v, z) - 2 * x).plus_scalar(-cv.eta)),
        (
            "[X,V] - {V,Z} - V - xi",
            (commutator(x, v) - anticommutator(v, z) - v).plus_scalar(-cv.xi),
        ),
    ]


def _trio(ops: OperatorSet, cv: CentralValues) -> list[tuple[str, Operator]]:
    v, vt, z, z_inv = ops.require("V", "Vt", "Z", "Zinv")
    one = Operator.identity(v.n)
    z_inv2 = z_inv @ z_inv
    return [
        ("Z Zinv - I", z @ z_inv - one),
        ("Zinv Z - I", z_inv @ z - one),
        (
            "[V,Vt] + Vt^2 + V - Vt - zeta Zinv^2",
            commutator(v, vt) + vt @ vt + v - vt - cv.zeta * z_inv2,
        ),
        (
            "[V,Z] - {Vt,Z} + Z - eta + I",
            (commutator(v, z) - anticommutator(vt, z) + z).plus_scalar(1 - cv.eta),
        ),
        ("[Z,Vt] - Z - I", commutator(z, vt) - z - one),
    ]


def _trio_derived(ops: OperatorSet, cv: CentralValues) -> list[tuple[str, Operator]]:
    v, vt, z_inv = ops.require("V", "Vt", "Zinv")
    z_inv2 = z_inv @ z_inv
    return [
        ("[Vt,Zinv] - Zinv^2 - Zinv", commutator(vt, z_inv) - z_inv2 - z_inv),
        (
            "[V,Zinv] + {Vt,Zinv} + (eta-1) Zinv^2 - Zinv",
            commutator(v, z_inv)
            + anticommutator(vt, z_inv)
            + (cv.eta - 1) * z_inv2
            - z_inv,
        ),
    ]


def _hahn_embed(ops: OperatorSet, cv: CentralValues) -> list[tuple[str, Operator]]:
    k1, k2 = ops.require("K1", "K2")
    rho = ops.params.get_rho()
    eta, xi, q = cv.eta, cv.xi, cv.casimir_meta
    k21 = commutator(k2, k1)
    first_rhs = (2 * (k1 @ k1) - k2).plus_scalar(
        -2 * q - (eta * eta + rho * rho) / 2 + eta - xi
    )
    second_rhs = (2 * anticommutator(k1, k2)).plus_scalar(2 * rho * xi)
    return [
        (
            "[K1,[K2,K1]] - (2K1^2 - K2 - 2Q - (eta^2+rho^2)/2 + eta - xi)",
            commutator(k1, k21) - first_rhs,
        ),
        ("[[K2,K1],K2] - 2{K1,K2} - 2 rho xi", commutator(k21, k2) - second_rhs),
    ]


def _jacobi(ops: OperatorSet, cv: CentralValues) -> list[tuple[str, Operator]]:
    v, z = ops.V, ops.Z
    vz = commutator(v, z)
    return [
        ("[Z,[V,Z]] - 2Z^2 - 2Z", commutator(z, vz) - 2 * (z @ z) - 2 * z),
        (
            "[[V,Z],V] - 2{V,Z} - 2V - 2xi",
            (commutator(vz, v) - 2 * anticommutator(v, z) - 2 * v).plus_scalar(
                -2 * cv.xi
            ),
        ),
    ]


_FAMILIES: dict[
    ResidualFamily,
    Callable[[OperatorSet, CentralValues], list[tuple[str, Operator]]],
] = {
    ResidualFamily.META: _meta,
    ResidualFamily.TRIO: _trio,
    ResidualFamily.TRIO_DERIVED: _trio_derived,
    ResidualFamily.HAHN_EMBED: _hahn_embed,
    ResidualFamily.JACOBI: _jacobi,
}


def relation_residuals(
    ops: OperatorSet, cv: CentralValues, family: ResidualFamily
) -> ResidualSet:
    """
    Residuals of one relation family.

    The jacobi family holds in every realization, since its relations follow
    from the meta ones; the others need the operators of a difference
    realization.

    :param ops: The realization.
    :param cv: Its central values.
    :param family: The relation family.
    :return: The residual operators.
    :raises WrongKind: If the family needs operators the realization lacks.
    """
    residuals = _FAMILIES[family](ops, cv)
    return ResidualSet(family, tuple(residuals), ops.exact_columns)


_CASIMIR_GENERATORS = {
    CasimirKind.META: ("X", "V", "Z"),
    CasimirKind.TRIO: ("V", "Vt", "Z", "Zinv"),
}


def casimir_operator(
    ops: OperatorSet, cv: CentralValues, which: CasimirKind
) -> Operator:
    if which == CasimirKind.META:
        x, v, z = ops.require("X", "V", "Z")
        q = z @ v @ z + v @ z + x @ x - (1 - cv.eta) * x + cv.xi * z
        return q.named("Q")
    v, vt, z, z_inv = ops.require("V", "Vt", "Z", "Zinv")
    c = z @ v + v + cv.zeta * z_inv + vt @ z @ vt + (cv.eta - 1) * vt
    return c.named("C")


def casimir_check(
    ops: OperatorSet, cv: CentralValues, which: CasimirKind
) -> tuple[Operator, Rational]:
    """
    Build a Casimir element and check that it acts as the expected scalar and
    commutes with every generator.

    :param ops: The realization; the jacobi kind has no Casimir here.
    :param cv: Its central values.
    :param which: The meta Casimir Q or the trio Casimir C.
    :return: The Casimir operator and its scalar value.
    :raises NotScalar: If the operator is not a multiple of the identity.
    :raises IdentityFailure: If the scalar differs from the central value or
        a commutator with a generator is nonzero.
    :raises WrongKind: If the realization lacks the generators.
    """
    casimir = casimir_operator(ops, cv, which)
    value = casimir.scalar_value()
    if value is None:
        hit = mx.first_difference(
            casimir.matrix, mx.identity(casimir.n + 1) * casimir.matrix[0, 0]
        )
        assert hit is not None
        i, j, got, _ = hit
        raise NotScalar(
            f"Casimir {casimir.name} is not a multiple of the identity",
            {f"{casimir.name} [{i}][{j}]": format_rational(got)},
        )
    expected = cv.casimir_meta if which == CasimirKind.META else cv.casimir_trio
    if value != expected:
        raise IdentityFailure(
            f"Casimir {casimir.name} acts as {format_rational(value)}",
            {"value": format_rational(value), "expected": format_rational(expected)},
        )
    names = _CASIMIR_GENERATORS[which]
    for name, generator in zip(names, ops.require(*names)):
        if not commutator(casimir, generator).is_zero():
            raise IdentityFailure(
                f"Casimir {casimir.name} does not commute with {name}",
                {"generator": name},
            )
    return casimir, value


def _scalar_identity(name: str, lhs: Rational, rhs: Rational) -> CheckResult:
    detail = {"lhs": format_rational(lhs), "rhs": format_rational(rhs)}
    if lhs == rhs:
        return check_pass(name, "isomorphism", detail)
    return check_fail(name, "isomorphism", detail)


def _operator_identity(name: str, residual: Operator) -> CheckResult:
    if residual.is_zero():
        return check_pass(name, "isomorphism")
    hit = mx.first_difference(residual.matrix, mx.zeros(residual.n + 1))
    assert hit is not None
    i, j, value, _ = hit
    return check_fail(name, "isomorphism", {f"[{i}][{j}]": format_rational(value)})


def _family_agreement(
    name: str, source: ResidualSet, target: ResidualSet
) -> CheckResult:
    """
    The substituted source relations vanish exactly when the target ones do,
    and both vanish.
    """
    detail = {f"source {k}": v for k, v in source.detail().items()}
    detail.update({f"target {k}": v for k, v in target.detail().items()})
    if source.passed() and target.passed():
        return check_pass(name, "isomorphism")
    return check_fail(name, "isomorphism", detail)


def isomorphism_check(
    ops: OperatorSet,
    cv: CentralValues,
    residuals: Mapping[ResidualFamily, ResidualSet] | None = None,
    casimirs: Mapping[CasimirKind, Rational] | None = None,
) -> list[CheckResult]:
    """
    Check the isomorphism between the meta algebra extended by Z^-1 and the
    trio algebra inside a difference realization.

    Covers X = Vt Z, Q = -zeta, C = -xi (with the Casimirs evaluated from
    their operators), the substitution X -> Vt Z turning the meta relations
    into consequences of the trio ones, the inverse substitution
    Vt -> X Zinv, and the derived identities [Z, Vt Z] = Z^2 + Z and
    [V, Vt Z] = -{V, Z} - V + C.

    :param ops: The realized operators.
    :param cv: Their central values.
    :param residuals: Meta and trio residuals of ops already computed.
    :param casimirs: Casimir scalars of ops already verified.
    :raises WrongKind: For the jacobi kind.
    """
    x, v, vt, z, z_inv = ops.require("X", "V", "Vt", "Z", "Zinv")
    residuals = {} if residuals is None else residuals
    casimirs = {} if casimirs is None else casimirs

    def own(family: ResidualFamily) -> ResidualSet:
        if family in residuals:
            return residuals[family]
        return relation_residuals(ops, cv, family)

    results = [_operator_identity("X = Vt Z", x - vt @ z)]

    for label, which, other in (
        ("Q = -zeta", CasimirKind.META, cv.zeta),
        ("C = -xi", CasimirKind.TRIO, cv.xi),
    ):
        if which in casimirs:
            results.append(_scalar_identity(label, casimirs[which], -other))
            continue
        try:
            _, value = casimir_check(ops, cv, which)
        except (NotScalar, IdentityFailure) as e:
            results.append(check_fail(label, "isomorphism", dict(e.detail)))
            continue
        results.append(_scalar_identity(label, value, -other))

    phi_ops = replace(ops, X=vt @ z)
    results.append(
        _family_agreement(
            "phi: meta relations with X = Vt Z",
            relation_residuals(phi_ops, cv, ResidualFamily.META),
            own(ResidualFamily.TRIO),
        )
    )
    psi_ops = replace(ops, Vt=x @ z_inv)
    psi_cv = replace(cv, zeta=-cv.casimir_meta)
    results.append(
        _family_agreement(
            "psi: trio relations with Vt = X Zinv",
            relation_residuals(psi_ops, psi_cv, ResidualFamily.TRIO),
            own(ResidualFamily.META),
        )
    )

    vtz = vt @ z
    results.append(
        _operator_identity("[Z, Vt Z] = Z^2 + Z", commutator(z, vtz) - z @ z - z)
    )
    results.append(
        _operator_identity(
            "[V, Vt Z] = -{V,Z} - V + C",
            (commutator(v, vtz) + anticommutator(v, z) + v).plus_scalar(
                -cv.casimir_trio
            ),
        )
    )
    return results

