"""
The distinguished bases of C_N[x] for the standard realization.
"""

from collections.abc import Callable

from leonard_trio_lab.algebra.params import ParamKind, ParamSet, check_generic
from leonard_trio_lab.errors import WrongKind
from leonard_trio_lab.polyspace.basis import BasisFamily, BasisKind
from leonard_trio_lab.polyspace.poly import Poly, poch_poly
from leonard_trio_lab.tracing import trace_basis_build


def _a_member(params: ParamSet, k: int) -> Poly:
    a, n = params.a, params.n
    return poch_poly(a, k, False, n) * poch_poly(1 - a - n, n - k, False, n)


def _b_member(params: ParamSet, k: int) -> Poly:
    return poch_poly(params.get_c(), k, False, params.n)


def _c_member(params: ParamSet, k: int) -> Poly:
    return poch_poly(params.get_rho(), k, True, params.n)


def _d_member(params: ParamSet, k: int) -> Poly:
    return -poch_poly(params.get_c() + 1, k, False, params.n)


def _s_member(params: ParamSet, k: int) -> Poly:
    return poch_poly(params.a, k, False, params.n)


_MEMBERS: dict[BasisKind, Callable[[ParamSet, int], Poly]] = {
    BasisKind.A: _a_member,
    BasisKind.B: _b_member,
    BasisKind.C: _c_member,
    BasisKind.D: _d_member,
    BasisKind.S: _s_member,
}


def build_basis(kind: BasisKind, params: ParamSet) -> BasisFamily:
    """
    Build one of the distinguished bases:

    - a_k = (x+a)_k (x+1-a-N)_{N-k}, eigenbasis of V;
    - b_k = (x+c)_k, eigenbasis of Vt;
    - c_k = (rho-x)_k, eigenbasis of K1;
    - d_k = -(x+c+1)_k = Zinv b_k, generalized eigenbasis of (X, Z);
    - s_k = (x+a)_k, on which V and K1 act bidiagonally.

    :param kind: The family.
    :param params: Standard-kind parameters; the c-basis needs rho.
    :return: The basis.
    :raises NonGenericParams: If the genericity predicate fails.
    :raises SingularBasis: If the members are linearly dependent.
    :raises WrongKind: If the parameters are not of the standard kind, or rho
        is missing for the c-basis.
    """
    if params.kind != ParamKind.STANDARD:
        raise WrongKind(
            f"Bases are defined for the standard kind, not {params.kind.value}"
        )
    if kind == BasisKind.MONOMIAL:
        return BasisFamily.monomial(params.n)
    if kind == BasisKind.C and not params.has_rho:
        raise WrongKind("The c-basis needs rho")
    check_generic(params)
    member = _MEMBERS[kind]
    basis = BasisFamily(kind, tuple(member(params, k) for k in range(params.n + 1)))
    basis.check_invertible()
    trace_basis_build(kind.value, params.n, source="build_basis", run_id=params.label())
    return basis
