"""
Orthogonality of the Hahn polynomials and biorthogonality of the Hahn
rational functions.
"""

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from leonard_trio_lab.algebra.params import ParamSet
from leonard_trio_lab.errors import IdentityFailure
from leonard_trio_lab.exact.kernels import gen_binomial, minus_one_power, pochhammer
from leonard_trio_lab.exact.rational import Rational, RationalLike, format_rational
from leonard_trio_lab.specialfn.hahn import HahnParams, hahn_Q, rational_U


def hahn_weight(ell: int, p: HahnParams) -> Rational:
    """
    binom(a+rho-1+l, l) binom(a+N-1-rho-l, N-l), generalized binomials.
    """
    assert p.rho is not None, "The Hahn weight needs rho"
    a, n, rho = p.a, p.n, p.rho
    return gen_binomial(a + rho - 1 + ell, ell) * gen_binomial(
        a + n - 1 - rho - ell, n - ell
    )


def hahn_norm(k: int, p: HahnParams) -> Rational:
    """
    (-1)^k k! (k+2a-1)_{N+1} (a-rho)_k / ((2k+2a-1) (a+rho)_k (-N)_k N!).
    """
    assert p.rho is not None, "The Hahn norm needs rho"
    a, n, rho = p.a, p.n, p.rho
    numerator = minus_one_power(k) * factorial(k) * pochhammer(k + 2 * a - 1, n + 1)
    numerator *= pochhammer(a - rho, k)
    denominator = (2 * k + 2 * a - 1) * pochhammer(a + rho, k) * pochhammer(-n, k)
    return numerator / (denominator * factorial(n))


@dataclass(frozen=True, slots=True)
class OrthoData:
    """
    :cvar weights: w(l) for l = 0..N.
    :cvar norms: h_k for k = 0..N.
    """

    weights: tuple[Rational, ...]
    norms: tuple[Rational, ...]


def ortho_data(params: ParamSet) -> OrthoData:
    p = HahnParams.from_params(params)
    ks = range(p.n + 1)
    return OrthoData(
        tuple(hahn_weight(ell, p) for ell in ks),
        tuple(hahn_norm(k, p) for k in ks),
    )


def _q_rows(params: ParamSet, degrees: Sequence[int]) -> dict[int, list[Rational]]:
    """
    Q_k(l) for l = 0..N, one row per degree k.
    """
    p = HahnParams.from_params(params)
    ls = range(p.n + 1)
    return {k: [hahn_Q(k, ell, p) for ell in ls] for k in degrees}


def _ortho_pair(
    m: int, n: int, q: Mapping[int, Sequence[Rational]], data: OrthoData
) -> tuple[Rational, Rational]:
    lhs = sum(
        (w * q[m][ell] * q[n][ell] for ell, w in enumerate(data.weights)),
        Fraction(0),
    )
    rhs = data.norms[n] if m == n else Fraction(0)
    if lhs != rhs:
        raise IdentityFailure(
            f"Orthogonality of Q_{m} and Q_{n} fails",
            {
                "m": str(m),
                "n": str(n),
                "lhs": format_rational(lhs),
                "rhs": format_rational(rhs),
            },
        )
    return lhs, rhs


def orthogonality_check(
    params: ParamSet, m: int, n: int, data: OrthoData | None = None
) -> tuple[Rational, Rational]:
    """
    Check sum_l w(l) Q_m(l) Q_n(l) = delta_{mn} h_n exactly.

    :param params: Parameters with rho.
    :param m: First degree, at most N.
    :param n: Second degree, at most N.
    :param data: Weights and norms to use instead of the closed forms.
    :return: Both sides.
    :raises IdentityFailure: If the sides differ.
    """
    data = ortho_data(params) if data is None else data
    return _ortho_pair(m, n, _q_rows(params, sorted({m, n})), data)


def orthogonality_all(params: ParamSet, data: OrthoData | None = None) -> int:
    """
    Check orthogonality for every pair of degrees, evaluating each Q_k(l)
    once.

    :return: The number of pairs checked.
    :raises IdentityFailure: At the first pair where the sides differ.
    """
    data = ortho_data(params) if data is None else data
    size = params.n + 1
    q = _q_rows(params, range(size))
    for m in range(size):
        for n in range(size):
            _ortho_pair(m, n, q, data)
    return size * size


@dataclass(frozen=True, slots=True)
class BiorthoData:
    """
    :cvar weights: W(l) = binom(N, l) (1-a-c-N)_{N-l} (c-a)_l.
    :cvar norms: h_k = (-1)^N (1-2a) (2a)_N k! (2a+N)_k
        / ((1-2a-2k) (-N)_k (2a-1)_k).
    """

    weights: tuple[Rational, ...]
    norms: tuple[Rational, ...]


def biortho_data(a: RationalLike, c: RationalLike, n: int) -> BiorthoData:
    a, c = Fraction(a), Fraction(c)
    weights = tuple(
        comb(n, ell) * pochhammer(1 - a - c - n, n - ell) * pochhammer(c - a, ell)
        for ell in range(n + 1)
    )
    norms = []
    for k in range(n + 1):
        numerator = minus_one_power(n) * (1 - 2 * a) * pochhammer(2 * a, n)
        numerator *= factorial(k) * pochhammer(2 * a + n, k)
        denominator = (1 - 2 * a - 2 * k) * pochhammer(-n, k)
        denominator *= pochhammer(2 * a - 1, k)
        norms.append(numerator / denominator)
    return BiorthoData(weights, tuple(norms))


def biorthogonality_check(
    a: RationalLike, c: RationalLike, n: int, data: BiorthoData | None = None
) -> int:
    """
    Check both biorthogonality relations of the rational functions
    U_k(l) = U_k(l; a, c-1, N) and V_k(l) = U_k(N-l; a, -c-N, N):

    - sum_l W(l) U_s(l) V_k(l) = h_k delta_{ks};
    - sum_k U_k(l) V_k(l') / h_k = delta_{ll'} / W(l).

    :param a: First parameter.
    :param c: Second parameter.
    :param n: The top index N.
    :param data: Weights and norms to use instead of the closed forms.
    :return: The number of index pairs checked.
    :raises IdentityFailure: At the first pair where the sides differ.
    """
    a, c = Fraction(a), Fraction(c)
    data = biortho_data(a, c, n) if data is None else data
    ks = range(n + 1)
    u = [[rational_U(k, ell, a, c - 1, n) for ell in ks] for k in ks]
    v = [[rational_U(k, n - ell, a, -c - n, n) for ell in ks] for k in ks]
    checked = 0

    for s in ks:
        for k in ks:
            lhs = sum(
                (data.weights[ell] * u[s][ell] * v[k][ell] for ell in ks),
                Fraction(0),
            )
            rhs = data.norms[k] if k == s else Fraction(0)
            checked += 1
            if lhs != rhs:
                raise IdentityFailure(
                    f"Biorthogonality of U_{s} and V_{k} fails",
                    {
                        "s": str(s),
                        "k": str(k),
                        "lhs": format_rational(lhs),
                        "rhs": format_rational(rhs),
                    },
                )

    for ell in ks:
        for ell2 in ks:
            lhs = sum(
                (u[k][ell] * v[k][ell2] / data.norms[k] for k in ks),
                Fraction(0),
            )
            rhs = 1 / data.weights[ell] if ell == ell2 else Fraction(0)
            checked += 1
            if lhs != rhs:
                raise IdentityFailure(
                    f"Dual biorthogonality at ({ell}, {ell2}) fails",
                    {
                        "l": str(ell),
                        "l'": str(ell2),
                        "lhs": format_rational(lhs),
                        "rhs": format_rational(rhs),
                    },
                )
    return checked
