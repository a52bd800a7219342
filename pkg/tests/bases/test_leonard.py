from dataclasses import replace

import pytest

from leonard_trio_lab.algebra.params import ParamKind, ParamSet
from leonard_trio_lab.algebra.realization import realize
from leonard_trio_lab.bases.leonard import trio_verdict
from leonard_trio_lab.errors import WrongKind
from leonard_trio_lab.polyspace.structure import StructureTag
from tests import gen_generic_params, gen_generic_params_list


@pytest.mark.parametrize("params", gen_generic_params_list())
class TestTrioVerdict:
    def test_trio_and_pair(self, params: ParamSet) -> None:
        verdict = trio_verdict(params)
        assert verdict.is_leonard_trio
        assert verdict.is_leonard_pair_VK1 is True

    def test_evidence(self, params: ParamSet) -> None:
        evidence = trio_verdict(params).structure_evidence
        assert evidence["V on a"].is_diagonal_multiplicity_free()
        assert evidence["Vt on b"].is_diagonal_multiplicity_free()
        assert evidence["K1 on c"].is_diagonal_multiplicity_free()
        if params.n > 0:
            assert evidence["K1 on s"].tag == StructureTag.UPPER_BIDIAGONAL
            assert evidence["V on s"].tag == StructureTag.LOWER_BIDIAGONAL
            assert evidence["Z on b"].tag == StructureTag.UPPER_BIDIAGONAL
            assert evidence["V on c"].tag == StructureTag.IRREDUCIBLE_TRIDIAGONAL


class TestTrioVerdictEdgeCases:
    def test_zero_dimensional(self) -> None:
        verdict = trio_verdict(gen_generic_params(ParamKind.STANDARD, 0))
        assert verdict.is_leonard_trio
        assert verdict.is_leonard_pair_VK1 is True
        assert all(verdict.irreducible.values())

    def test_without_rho(self) -> None:
        params = gen_generic_params(ParamKind.STANDARD, 3, with_rho=False)
        verdict = trio_verdict(params)
        assert verdict.is_leonard_trio
        assert verdict.is_leonard_pair_VK1 is None
        assert "K1 on c" not in verdict.structure_evidence

    def test_tampered_v_is_not_diagonal(self) -> None:
        params = gen_generic_params(ParamKind.STANDARD, 3)
        ops, _ = realize(params)
        verdict = trio_verdict(params, replace(ops, V=ops.V + ops.Z))
        assert not verdict.is_leonard_trio
        assert verdict.is_leonard_pair_VK1 is False

    def test_to_dict(self) -> None:
        verdict = trio_verdict(gen_generic_params(ParamKind.STANDARD, 2))
        data = verdict.to_dict()
        assert data["is_leonard_trio"] is True
        evidence = data["structure_evidence"]
        assert isinstance(evidence, dict)
        assert evidence["V on a"] == "diagonal (multiplicity-free)"

    def test_needs_standard_kind(self) -> None:
        with pytest.raises(WrongKind):
            trio_verdict(gen_generic_params(ParamKind.GENERAL, 2))
