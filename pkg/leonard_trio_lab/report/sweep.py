"""
Sweeps of the verification suite over sampled parameter sets.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any

from leonard_trio_lab.algebra.params import ParamKind
from leonard_trio_lab.report.report import Summary
from leonard_trio_lab.report.sampler import sample_params, sample_rng
from leonard_trio_lab.report.suite import run_suite
from leonard_trio_lab.tracing import trace_sample_end, trace_sample_start


@dataclass(frozen=True, slots=True)
class SweepConfig:
    """
    :cvar kind: The realization kind of every sample.
    :cvar n_min: Smallest top degree N.
    :cvar n_max: Largest top degree N.
    :cvar samples: Parameter sets drawn per degree.
    :cvar seed: Seed of the sampler.
    :cvar jobs: Worker processes; 1 runs in-process.
    """

    kind: ParamKind = ParamKind.STANDARD
    n_min: int = 1
    n_max: int = 8
    samples: int = 25
    seed: int = 0
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.n_min < 0 or self.n_min > self.n_max:
            raise ValueError(f"Invalid degree range [{self.n_min}, {self.n_max}]")
        if self.samples < 1:
            raise ValueError(f"Samples must be positive, got {self.samples}")
        if self.jobs < 1:
            raise ValueError(f"Jobs must be positive, got {self.jobs}")

    def tasks(self) -> list[tuple[int, int]]:
        """
        (N, sample index) pairs in report order.
        """
        return [
            (n, index)
            for n in range(self.n_min, self.n_max + 1)
            for index in range(self.samples)
        ]

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "samples": self.samples,
            "seed": self.seed,
        }


@dataclass(frozen=True, slots=True)
class SweepReport:
    config: SweepConfig
    samples: list[dict[str, Any]]

    @property
    def summary(self) -> Summary:
        totals = [s["report"]["summary"] for s in self.samples]
        return Summary(
            total=sum(t["total"] for t in totals),
            passed=sum(t["passed"] for t in totals),
            failed=sum(t["failed"] for t in totals),
            skipped=sum(t["skipped"] for t in totals),
        )

    @property
    def ok(self) -> bool:
        return self.summary.failed == 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "config": self.config.to_dict(),
            "samples": self.samples,
            "summary": self.summary.to_dict(),
        }


def run_sample(kind: ParamKind, seed: int, n: int, index: int) -> dict[str, Any]:
    """
    Draw the parameters of one sample and run the suite on them.

    :return: The serialized report, tagged with N and the sample index.
    """
    params = sample_params(kind, n, sample_rng(seed, n, index))
    report = run_suite(params)
    return {"n": n, "index": index, "report": report.to_dict()}


def _run_task(args: tuple[ParamKind, int, int, int]) -> dict[str, Any]:
    return run_sample(*args)


def run_sweep(cfg: SweepConfig) -> SweepReport:
    """
    Run the suite on cfg.samples parameter sets for every N in
    [cfg.n_min, cfg.n_max].

    With cfg.jobs > 1 the samples run in worker processes; the results are
    merged in (N, sample index) order either way, so the report depends on
    the configuration alone. Check events are traced by the process that
    runs the suite.

    :param cfg: The sweep configuration.
    :return: The aggregated report.
    """
    tasks = cfg.tasks()
    run_id = f"sweep-{cfg.seed}"

    def end(result: dict[str, Any]) -> None:
        failed = result["report"]["summary"]["failed"]
        trace_sample_end(
            result["n"], result["index"], failed, source="run_sweep", run_id=run_id
        )

    def start(n: int, index: int) -> None:
        trace_sample_start(
            n,
            index,
            {"kind": cfg.kind.value, "seed": str(cfg.seed)},
            source="run_sweep",
            run_id=run_id,
        )

    results: list[dict[str, Any]] = []
    if cfg.jobs > 1:
        for n, index in tasks:
            start(n, index)
        args = [(cfg.kind, cfg.seed, n, index) for n, index in tasks]
        with ProcessPoolExecutor(max_workers=cfg.jobs) as executor:
            results = list(executor.map(_run_task, args))
        for result in results:
            end(result)
    else:
        for n, index in tasks:
            start(n, index)
            results.append(run_sample(cfg.kind, cfg.seed, n, index))
            end(results[-1])
    return SweepReport(cfg, results)
