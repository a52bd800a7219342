from collections.abc import Iterator
from fractions import Fraction

import pytest

from leonard_trio_lab.algebra.params import ParamKind, ParamSet
from leonard_trio_lab.bases.context import BasisContext
from leonard_trio_lab.bases.families import build_basis
from leonard_trio_lab.errors import WrongKind
from leonard_trio_lab.polyspace import matrix as mx
from leonard_trio_lab.polyspace.basis import (
    BasisKind,
    change_of_basis,
    matrix_in_basis,
)
from leonard_trio_lab.polyspace.structure import StructureTag, classify
from leonard_trio_lab.report.suite import run_suite
from leonard_trio_lab.tracing import (
    TraceEventType,
    TraceLevel,
    clear_traces,
    get_global_collector,
    set_global_trace_level,
)
from tests import gen_generic_params, gen_generic_params_list


@pytest.fixture
def operator_tracing() -> Iterator[None]:
    clear_traces()
    set_global_trace_level(TraceLevel.OPERATORS)
    yield
    set_global_trace_level(TraceLevel.NONE)
    clear_traces()


def _built_kinds() -> list[str]:
    events = get_global_collector().get_events(TraceEventType.BASIS_BUILD)
    return [e.details["basis_kind"] for e in events]


@pytest.mark.parametrize("params", gen_generic_params_list(count=4))
class TestBasisContext:
    def test_matrices_match_direct_computation(self, params: ParamSet) -> None:
        ctx = BasisContext(params)
        ops = ctx.ops
        assert ops.Vt is not None and ops.K1 is not None
        for word, op, kind in (
            ("Z", ops.Z, BasisKind.A),
            ("Vt Z", ops.Vt @ ops.Z, BasisKind.A),
            ("Z V", ops.Z @ ops.V, BasisKind.B),
            ("K1", ops.K1, BasisKind.C),
        ):
            expected = matrix_in_basis(op, build_basis(kind, params))
            assert mx.mat_equal(ctx.matrix(word, kind), expected)

    def test_change_matches_direct_computation(self, params: ParamSet) -> None:
        ctx = BasisContext(params)
        expected = change_of_basis(
            build_basis(BasisKind.A, params), build_basis(BasisKind.B, params)
        )
        assert mx.mat_equal(ctx.change(BasisKind.A, BasisKind.B), expected)

    def test_results_are_memoized(self, params: ParamSet) -> None:
        ctx = BasisContext(params)
        assert ctx.basis(BasisKind.A) is ctx.basis(BasisKind.A)
        assert ctx.operator("Vt Z") is ctx.operator("Vt Z")
        assert ctx.matrix("Z", BasisKind.B) is ctx.matrix("Z", BasisKind.B)
        assert ctx.change(BasisKind.S, BasisKind.C) is ctx.change(
            BasisKind.S, BasisKind.C
        )
        basis = ctx.basis(BasisKind.A)
        assert basis.inverse_matrix() is basis.inverse_matrix()

    def test_z_on_b_columns_hold_images(self, params: ParamSet) -> None:
        # Z b_k = k b_{k-1} - b_k lands above the diagonal of column k
        m = BasisContext(params).matrix("Z", BasisKind.B)
        assert classify(m).tag == StructureTag.UPPER_BIDIAGONAL
        for k in range(params.n + 1):
            assert m[k, k] == -1
            if k > 0:
                assert m[k - 1, k] == k


class TestBasisContextEdgeCases:
    def test_of_reuses_a_context(self) -> None:
        params = gen_generic_params(ParamKind.STANDARD, 2)
        ctx = BasisContext(params)
        assert BasisContext.of(params, ctx) is ctx
        assert BasisContext.of(params, None) is not ctx

    def test_cached_matrices_are_read_only(self) -> None:
        ctx = BasisContext(gen_generic_params(ParamKind.STANDARD, 2))
        with pytest.raises(ValueError):
            ctx.matrix("V", BasisKind.A)[0, 0] = Fraction(1)
        with pytest.raises(ValueError):
            ctx.change(BasisKind.A, BasisKind.S)[0, 0] = Fraction(1)

    def test_missing_operator(self) -> None:
        ctx = BasisContext(gen_generic_params(ParamKind.STANDARD, 2, with_rho=False))
        with pytest.raises(WrongKind):
            ctx.matrix("K1", BasisKind.A)

    def test_bases_built_once(self, operator_tracing: None) -> None:
        ctx = BasisContext(gen_generic_params(ParamKind.STANDARD, 3))
        ctx.matrix("Z", BasisKind.A)
        ctx.matrix("Vt Z", BasisKind.A)
        ctx.change(BasisKind.A, BasisKind.B)
        assert _built_kinds() == ["a", "b"]

    def test_suite_builds_each_basis_once(self, operator_tracing: None) -> None:
        run_suite(gen_generic_params(ParamKind.STANDARD, 2))
        kinds = _built_kinds()
        assert sorted(kinds) == ["a", "b", "c", "d", "s"]
