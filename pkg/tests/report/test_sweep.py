import pytest

from leonard_trio_lab.algebra.params import ParamKind, is_fully_generic
from leonard_trio_lab.report.report import dumps_report
from leonard_trio_lab.report.sampler import (
    DENOMINATORS,
    sample_params,
    sample_rng,
)
from leonard_trio_lab.report.sweep import SweepConfig, run_sample, run_sweep


class TestSampler:
    @pytest.mark.parametrize("kind", list(ParamKind))
    def test_generic_and_reproducible(self, kind: ParamKind) -> None:
        first = sample_params(kind, 4, sample_rng(3, 4, 0))
        second = sample_params(kind, 4, sample_rng(3, 4, 0))
        assert first == second
        assert first.kind == kind
        assert is_fully_generic(first)
        assert first.a.denominator in (1, *DENOMINATORS)

    def test_samples_differ_by_index(self) -> None:
        draws = {
            sample_params(ParamKind.STANDARD, 4, sample_rng(3, 4, i))
            for i in range(5)
        }
        assert len(draws) > 1

    def test_without_rho(self) -> None:
        params = sample_params(
            ParamKind.GENERAL, 2, sample_rng(0, 2, 0), with_rho=False
        )
        assert params.rho is None
        assert params.b is not None


class TestSweepConfig:
    @pytest.mark.parametrize(
        "kwargs",
        [
            {"n_min": 3, "n_max": 2},
            {"n_min": -1},
            {"samples": 0},
            {"jobs": 0},
        ],
    )
    def test_invalid(self, kwargs: dict[str, int]) -> None:
        with pytest.raises(ValueError):
            SweepConfig(**kwargs)  # type: ignore[arg-type]

    def test_tasks(self) -> None:
        cfg = SweepConfig(n_min=1, n_max=2, samples=2)
        assert cfg.tasks() == [(1, 0), (1, 1), (2, 0), (2, 1)]

    def test_jobs_not_serialized(self) -> None:
        assert "jobs" not in SweepConfig(jobs=4).to_dict()


class TestRunSweep:
    def test_small_sweep(self) -> None:
        cfg = SweepConfig(n_min=0, n_max=1, samples=2, seed=7)
        report = run_sweep(cfg)
        assert report.ok
        assert [(s["n"], s["index"]) for s in report.samples] == cfg.tasks()
        assert report.summary.total == 4 * 40

    def test_deterministic(self) -> None:
        cfg = SweepConfig(n_min=0, n_max=1, samples=1, seed=11)
        first = dumps_report(run_sweep(cfg).to_dict())
        second = dumps_report(run_sweep(cfg).to_dict())
        assert first == second

    def test_worker_processes_match(self) -> None:
        cfg = SweepConfig(n_min=0, n_max=1, samples=1, seed=5)
        serial = run_sweep(cfg).to_dict()
        parallel = run_sweep(SweepConfig(n_min=0, n_max=1, samples=1, seed=5, jobs=2))
        assert parallel.to_dict() == serial

    def test_sample_matches_sweep(self) -> None:
        cfg = SweepConfig(kind=ParamKind.JACOBI, n_min=2, n_max=2, samples=1, seed=1)
        sample = run_sample(ParamKind.JACOBI, 1, 2, 0)
        assert run_sweep(cfg).samples == [sample]
