"""
The full verification suite on one parameter set.
"""

from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

from leonard_trio_lab.algebra.params import (
    CentralValues,
    ParamKind,
    ParamSet,
    is_rational_generic,
    rational_vanishing,
)
from leonard_trio_lab.algebra.realization import OperatorSet, realize
from leonard_trio_lab.algebra.relations import (
    CasimirKind,
    ResidualFamily,
    ResidualSet,
    casimir_check,
    isomorphism_check,
    relation_residuals,
)
from leonard_trio_lab.bases.context import BasisContext
from leonard_trio_lab.bases.eigen import (
    TridiagFamily,
    bidiagonal_check,
    eigen_check,
    tridiag_coeff_check,
)
from leonard_trio_lab.bases.leonard import trio_verdict
from leonard_trio_lab.checks import (
    CheckResult,
    CheckStatus,
    check_fail,
    check_from_error,
    check_pass,
    check_skipped,
)
from leonard_trio_lab.errors import DenominatorVanishes, VerificationError
from leonard_trio_lab.exact.rational import Rational, format_rational
from leonard_trio_lab.polyspace.basis import BasisKind
from leonard_trio_lab.polyspace.matrix import Matrix
from leonard_trio_lab.report.report import VerificationReport
from leonard_trio_lab.specialfn.bispectral import (
    BispectralSide,
    bispectral_consistency,
)
from leonard_trio_lab.specialfn.connection import ConnectionKind, connection_matrix
from leonard_trio_lab.specialfn.hahn import check_cleared_numerator
from leonard_trio_lab.specialfn.orthogonality import (
    biorthogonality_check,
    orthogonality_all,
)
from leonard_trio_lab.tracing import TraceEventType, trace_check

_TRACE_TYPES = {
    CheckStatus.PASS: TraceEventType.CHECK_PASS,
    CheckStatus.FAIL: TraceEventType.CHECK_FAIL,
    CheckStatus.SKIPPED: TraceEventType.CHECK_SKIP,
}

_DIFFERENCE_KINDS = (ParamKind.STANDARD, ParamKind.GENERAL)

Body = Callable[[], dict[str, str] | None]


@dataclass(frozen=True, slots=True)
class _Requirement:
    """
    :cvar kinds: Realizations the check applies to.
    :cvar rho: Whether the check needs rho.
    :cvar rational: Whether the check needs the rational genericity factors.
    """

    kinds: tuple[ParamKind, ...] = (ParamKind.STANDARD,)
    rho: bool = False
    rational: bool = False


class _SuiteRun:
    """
    Collects check results for one parameter set, converting verification
    errors into failures and tracing every outcome.

    Bases, operator matrices, residuals, Casimir scalars and verified
    connections are kept for the later stages.
    """

    def __init__(self, params: ParamSet, ops: OperatorSet, cv: CentralValues):
        self.params = params
        self.ops = ops
        self.cv = cv
        self.ctx = BasisContext(params, ops)
        self.residuals: dict[ResidualFamily, ResidualSet] = {}
        self.casimirs: dict[CasimirKind, Rational] = {}
        self.connections: dict[ConnectionKind, Matrix] = {}
        self.checks: list[CheckResult] = []
        self.facts: dict[str, Any] = {}

    def skip_reason(self, req: _Requirement) -> str | None:
        p = self.params
        if p.kind not in req.kinds:
            kinds = ", ".join(k.value for k in req.kinds)
            return f"applies to the {kinds} kind only"
        if req.rho and not p.has_rho:
            return "needs rho"
        if req.rational and not is_rational_generic(p):
            return "vanishing rational factors: " + ", ".join(rational_vanishing(p))
        return None

    def record(self, result: CheckResult) -> None:
        self.checks.append(result)
        trace_check(
            _TRACE_TYPES[result.status],
            result.name,
            result.family,
            dict(result.detail),
            source="run_suite",
            run_id=self.params.label(),
        )

    def run(self, name: str, family: str, req: _Requirement, body: Body) -> None:
        reason = self.skip_reason(req)
        if reason is not None:
            self.record(check_skipped(name, family, reason))
            return
        try:
            detail = body()
        except VerificationError as e:
            self.record(check_from_error(name, family, e))
            return
        except DenominatorVanishes as e:
            self.record(check_fail(name, family, {"error": str(e)}))
            return
        self.record(check_pass(name, family, detail))


def _relations(run: _SuiteRun) -> None:
    families = [
        (ResidualFamily.META, _Requirement(_DIFFERENCE_KINDS)),
        (ResidualFamily.TRIO, _Requirement(_DIFFERENCE_KINDS)),
        (ResidualFamily.TRIO_DERIVED, _Requirement(_DIFFERENCE_KINDS)),
        (ResidualFamily.HAHN_EMBED, _Requirement(_DIFFERENCE_KINDS, rho=True)),
        (ResidualFamily.JACOBI, _Requirement(tuple(ParamKind))),
    ]
    for family, req in families:
        name = f"{family.value} relations"
        reason = run.skip_reason(req)
        if reason is not None:
            run.record(check_skipped(name, "relations", reason))
            continue
        residuals = relation_residuals(run.ops, run.cv, family)
        run.residuals[family] = residuals
        if residuals.passed():
            run.record(check_pass(name, "relations"))
        else:
            run.record(check_fail(name, "relations", residuals.detail()))


def _casimirs(run: _SuiteRun) -> None:
    for which in CasimirKind:

        def body(which: CasimirKind = which) -> dict[str, str]:
            _, value = casimir_check(run.ops, run.cv, which)
            run.casimirs[which] = value
            run.facts[f"casimir_{which.value}"] = format_rational(value)
            return {"value": format_rational(value)}

        run.run(
            f"{which.value} casimir",
            "casimir",
            _Requirement(_DIFFERENCE_KINDS),
            body,
        )


def _isomorphism(run: _SuiteRun) -> None:
    reason = run.skip_reason(_Requirement(_DIFFERENCE_KINDS))
    if reason is not None:
        run.record(check_skipped("meta/trio isomorphism", "isomorphism", reason))
        return
    for result in isomorphism_check(run.ops, run.cv, run.residuals, run.casimirs):
        run.record(result)


def _eigen(run: _SuiteRun) -> None:
    for kind in (BasisKind.A, BasisKind.B, BasisKind.C, BasisKind.D):

        def body(kind: BasisKind = kind) -> dict[str, str]:
            data = eigen_check(kind, run.params, run.ctx)
            return {
                "operator": data.operator_name,
                "eigenvalues": ", ".join(format_rational(v) for v in data.eigenvalues),
            }

        run.run(
            f"eigenvectors of the {kind.value}-basis",
            "eigen",
            _Requirement(rho=kind == BasisKind.C),
            body,
        )

    def bidiagonal() -> None:
        bidiagonal_check(run.params, run.ctx)

    run.run(
        "K1 and V on the s-basis", "bidiagonal", _Requirement(rho=True), bidiagonal
    )
    for family in TridiagFamily:

        def tridiagonal(family: TridiagFamily = family) -> None:
            tridiag_coeff_check(run.params, [family], run.ctx)

        run.run(
            family.value,
            "tridiagonal",
            _Requirement(rho=family.needs_rho),
            tridiagonal,
        )


def _leonard(run: _SuiteRun) -> None:
    reason = run.skip_reason(_Requirement())
    if reason is not None:
        run.record(check_skipped("leonard trio", "leonard", reason))
        return
    verdict = trio_verdict(run.params, run.ctx)
    run.facts["trio_verdict"] = verdict.to_dict()
    evidence = {key: str(value) for key, value in verdict.structure_evidence.items()}
    if verdict.is_leonard_trio:
        run.record(check_pass("leonard trio", "leonard", evidence))
    else:
        run.record(check_fail("leonard trio", "leonard", evidence))
    if verdict.is_leonard_pair_VK1 is None:
        run.record(check_skipped("leonard pair (V, K1)", "leonard", "needs rho"))
    elif verdict.is_leonard_pair_VK1:
        run.record(check_pass("leonard pair (V, K1)", "leonard"))
    else:
        irreducible = {key: str(value) for key, value in verdict.irreducible.items()}
        run.record(check_fail("leonard pair (V, K1)", "leonard", irreducible))


def _connections(run: _SuiteRun) -> None:
    for kind in ConnectionKind:

        def body(kind: ConnectionKind = kind) -> None:
            run.connections[kind] = connection_matrix(kind, run.params, run.ctx)

        run.run(
            f"connection {kind.value}",
            "connection",
            _Requirement(rho=kind.needs_rho, rational=kind.rational),
            body,
        )


def _special_functions(run: _SuiteRun) -> None:
    p = run.params
    size = p.n + 1

    def orthogonality() -> dict[str, str]:
        return {"pairs": str(orthogonality_all(p))}

    def biorthogonality() -> dict[str, str]:
        return {"pairs": str(biorthogonality_check(p.a, p.get_c(), p.n))}

    def cleared_numerators() -> dict[str, str]:
        for k in range(size):
            check_cleared_numerator(k, p.a, p.get_c(), p.n)
        return {"degrees": str(size)}

    def bispectral(side: BispectralSide) -> dict[str, str]:
        passed = bispectral_consistency(p, [side], run.ctx, run.connections)
        return {"conjugations": "; ".join(passed)}

    run.run(
        "orthogonality of Q_k", "orthogonality", _Requirement(rho=True), orthogonality
    )
    run.run(
        "biorthogonality of U_k",
        "orthogonality",
        _Requirement(rational=True),
        biorthogonality,
    )
    run.run(
        "cleared numerators of U_k",
        "rational-functions",
        _Requirement(),
        cleared_numerators,
    )
    run.run(
        "polynomial bispectrality",
        "bispectral",
        _Requirement(rho=True),
        lambda: bispectral(BispectralSide.POLYNOMIAL),
    )
    run.run(
        "rational bispectrality",
        "bispectral",
        _Requirement(rational=True),
        lambda: bispectral(BispectralSide.RATIONAL),
    )


def run_suite(params: ParamSet) -> VerificationReport:
    """
    Run every check that applies to the parameter set.

    Checks whose own conditions fail are recorded as skipped with the reason:
    the basis and special-function checks outside the standard kind, the K1
    checks without rho and the rational-function checks when a rational
    genericity factor vanishes.

    :param params: The parameter set.
    :return: The report, checks in a fixed order.
    :raises NonGenericParams: If a core genericity factor vanishes.
    """
    ops, cv = realize(params)
    run = _SuiteRun(params, ops, cv)
    run.facts["central_values"] = {
        "eta": format_rational(cv.eta),
        "xi": format_rational(cv.xi),
        "zeta": format_rational(cv.zeta),
    }
    for stage in (
        _relations,
        _casimirs,
        _isomorphism,
        _eigen,
        _leonard,
        _connections,
        _special_functions,
    ):
        stage(run)
    return VerificationReport(params, run.checks, run.facts)
