import random
from fractions import Fraction

from leonard_trio_lab.algebra.params import ParamKind, ParamSet
from leonard_trio_lab.report.sampler import DENOMINATORS, sample_params

NUM_TESTS = 8
MAX_TEST_DEGREE = 5
TEST_SEED = 20241220

_rng = random.Random(TEST_SEED)


def gen_random_rational(
    min_numerator: int = -20, max_numerator: int = 20
) -> Fraction:
    return Fraction(
        _rng.randint(min_numerator, max_numerator), _rng.choice(DENOMINATORS)
    )


def gen_random_degree(min_n: int = 0, max_n: int = MAX_TEST_DEGREE) -> int:
    return _rng.randint(min_n, max_n)


def gen_generic_params(
    kind: ParamKind = ParamKind.STANDARD,
    n: int | None = None,
    with_rho: bool = True,
) -> ParamSet:
    """
    Parameters for which both genericity factor lists are free of zeros.
    """
    degree = gen_random_degree(1) if n is None else n
    return sample_params(kind, degree, _rng, with_rho=with_rho)


def gen_generic_params_list(
    kind: ParamKind = ParamKind.STANDARD,
    count: int = NUM_TESTS,
    with_rho: bool = True,
) -> list[ParamSet]:
    return [gen_generic_params(kind, with_rho=with_rho) for _ in range(count)]
