"""
Deterministic sampling of generic parameter sets.
"""

import random
from fractions import Fraction

from leonard_trio_lab.algebra.params import ParamKind, ParamSet, is_fully_generic
from leonard_trio_lab.exact.rational import Rational

NUMERATOR_RANGE = (-20, 20)
DENOMINATORS = (3, 5, 7, 11, 13)

# redraws per sample before giving up
MAX_DRAWS = 1000


def random_rational(rng: random.Random) -> Rational:
    numerator = rng.randint(*NUMERATOR_RANGE)
    return Fraction(numerator, rng.choice(DENOMINATORS))


def sample_rng(seed: int, n: int, index: int) -> random.Random:
    """
    The generator of one sample, a function of (seed, N, index) only, so that
    samples do not depend on the order in which they are drawn.
    """
    return random.Random(f"{seed}:{n}:{index}")


def sample_params(
    kind: ParamKind, n: int, rng: random.Random, with_rho: bool = True
) -> ParamSet:
    """
    Draw parameters until both genericity factor lists are free of zeros.

    :param kind: The realization kind.
    :param n: The top degree N.
    :param rng: The generator.
    :param with_rho: Whether to draw rho (ignored for the jacobi kind).
    :return: A fully generic parameter set.
    """
    for _ in range(MAX_DRAWS):
        a = random_rational(rng)
        b = random_rational(rng)
        c = random_rational(rng)
        rho = random_rational(rng) if with_rho else None
        if kind == ParamKind.STANDARD:
            params = ParamSet(kind, n, a, c=c, rho=rho)
        elif kind == ParamKind.GENERAL:
            params = ParamSet(kind, n, a, b=b, c=c, rho=rho)
        else:
            params = ParamSet(kind, n, a, b=b)
        if is_fully_generic(params):
            return params
    raise RuntimeError(f"No generic {kind.value} parameters in {MAX_DRAWS} draws")
