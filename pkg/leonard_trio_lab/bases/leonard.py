"""
Leonard trio and Leonard pair verdicts for the standard realization.
"""

from dataclasses import dataclass, field

from leonard_trio_lab.algebra.params import ParamSet
from leonard_trio_lab.algebra.realization import OperatorSet
from leonard_trio_lab.bases.context import BasisContext
from leonard_trio_lab.polyspace.basis import BasisKind
from leonard_trio_lab.polyspace.structure import (
    StructureClass,
    classify,
    is_irreducible_tridiagonal,
)


@dataclass(frozen=True, slots=True)
class TrioVerdict:
    """
    :cvar is_leonard_trio: V diagonal multiplicity-free with Z, Vt Z
        tridiagonal on the a-basis, and Vt diagonal multiplicity-free with
        Z, ZV tridiagonal on the b-basis.
    :cvar is_leonard_pair_VK1: Whether (V, K1) is a Leonard pair; None when
        rho is absent.
    :cvar structure_evidence: The class of every inspected matrix, keyed by
        "<operator> on <basis>". Column j of a matrix holds the image of
        member j, so Z b_k = k b_{k-1} - b_k is upper bidiagonal.
    :cvar irreducible: Irreducible tridiagonality of every inspected matrix,
        reported separately since the trio verdict does not require it.
    """

    is_leonard_trio: bool
    is_leonard_pair_VK1: bool | None
    structure_evidence: dict[str, StructureClass] = field(default_factory=dict)
    irreducible: dict[str, bool] = field(default_factory=dict)

    def to_dict(self) -> dict[str, object]:
        return {
            "is_leonard_trio": self.is_leonard_trio,
            "is_leonard_pair_VK1": self.is_leonard_pair_VK1,
            "structure_evidence": {
                key: str(value) for key, value in self.structure_evidence.items()
            },
            "irreducible": dict(self.irreducible),
        }


def trio_verdict(
    params: ParamSet, ops: OperatorSet | BasisContext | None = None
) -> TrioVerdict:
    """
    Classify the matrices of the realized operators on the a- and b-bases
    (and the c- and s-bases when rho is given) and evaluate the Leonard trio
    and Leonard pair conditions.

    Diagonal and bidiagonal shapes count as degenerate tridiagonal for the
    trio; the pair needs irreducible tridiagonal matrices.

    :param params: Standard-kind parameters.
    :param ops: A prebuilt realization of the same parameters, or a context
        sharing its bases.
    :return: The verdict and its evidence.
    :raises NonGenericParams: If the genericity predicate fails.
    """
    ctx = BasisContext.of(params, ops)
    evidence: dict[str, StructureClass] = {}
    irreducible: dict[str, bool] = {}

    def inspect(word: str, kind: BasisKind) -> StructureClass:
        m = ctx.matrix(word, kind)
        key = f"{word} on {kind.value}"
        structure = classify(m)
        evidence[key] = structure
        irreducible[key] = is_irreducible_tridiagonal(m)
        return structure

    v_a = inspect("V", BasisKind.A)
    z_a = inspect("Z", BasisKind.A)
    vtz_a = inspect("Vt Z", BasisKind.A)
    vt_b = inspect("Vt", BasisKind.B)
    z_b = inspect("Z", BasisKind.B)
    zv_b = inspect("Z V", BasisKind.B)
    is_trio = (
        v_a.is_diagonal_multiplicity_free()
        and z_a.is_tridiagonal()
        and vtz_a.is_tridiagonal()
        and vt_b.is_diagonal_multiplicity_free()
        and z_b.is_tridiagonal()
        and zv_b.is_tridiagonal()
    )

    is_pair: bool | None = None
    if params.has_rho:
        k1_c = inspect("K1", BasisKind.C)
        inspect("K1", BasisKind.A)
        inspect("V", BasisKind.C)
        inspect("K1", BasisKind.S)
        inspect("V", BasisKind.S)
        is_pair = (
            v_a.is_diagonal_multiplicity_free()
            and irreducible["K1 on a"]
            and k1_c.is_diagonal_multiplicity_free()
            and irreducible["V on c"]
        )
    return TrioVerdict(is_trio, is_pair, evidence, irreducible)
