"""
Assembly of verification reports: the full suite, parameter sweeps and
value tables.
"""

from .report import Summary, VerificationReport, dumps_report, write_report
from .sampler import random_rational, sample_params, sample_rng
from .suite import run_suite
from .sweep import SweepConfig, SweepReport, run_sample, run_sweep
from .tables import TableFunction, dumps_table, evaluate, value_table, write_table

__all__ = [
    "Summary",
    "VerificationReport",
    "dumps_report",
    "write_report",
    "random_rational",
    "sample_params",
    "sample_rng",
    "run_suite",
    "SweepConfig",
    "SweepReport",
    "run_sample",
    "run_sweep",
    "TableFunction",
    "dumps_table",
    "evaluate",
    "value_table",
    "write_table",
]
