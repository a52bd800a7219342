"""
Command line front end: the full verification report, parameter sweeps,
single values and value tables.

Negative rationals may follow their flag directly, as in ``--a -1/3``, or be
joined to it with an equals sign.
"""

import argparse
import re
import sys
from dataclasses import replace
from typing import Any, NoReturn, TextIO

from leonard_trio_lab.algebra.params import ParamKind, ParamSet
from leonard_trio_lab.builder.config_builder import ConfigBuilder
from leonard_trio_lab.errors import (
    ConfigError,
    DenominatorVanishes,
    ExitCode,
    NonGenericParams,
)
from leonard_trio_lab.exact.rational import Rational, format_rational, parse_rational
from leonard_trio_lab.report.report import Summary, dumps_report, write_report
from leonard_trio_lab.report.suite import run_suite
from leonard_trio_lab.report.sweep import SweepConfig, run_sweep
from leonard_trio_lab.report.tables import (
    TableFunction,
    dumps_table,
    evaluate,
    value_table,
    write_table,
)
from leonard_trio_lab.specialfn.hahn import HahnParams
from leonard_trio_lab.tracing import (
    TraceLevel,
    export_traces_json,
    set_global_trace_level,
)

_RATIONAL_FIELDS = ("a", "b", "c", "rho")
_RATIONAL_FLAGS = frozenset(f"--{name}" for name in _RATIONAL_FIELDS)
_NEGATIVE_RATIONAL = re.compile(r"^-\d+(/\d+)?$")


class BadFlags(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """
    Reports parse errors as BadFlags instead of exiting.
    """

    def error(self, message: str) -> NoReturn:
        raise BadFlags(f"{self.prog}: {message}")


def _join_negative_values(argv: list[str]) -> list[str]:
    """
    Rewrite "--a -1/3" as "--a=-1/3" so the value is not taken for an option.
    """
    out: list[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if (
            token in _RATIONAL_FLAGS
            and i + 1 < len(argv)
            and _NEGATIVE_RATIONAL.match(argv[i + 1])
        ):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            out.append(token)
            i += 1
    return out


def _rational_arg(text: str) -> Rational:
    try:
        return parse_rational(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _natural_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"Invalid natural number '{text}'") from e
    if value < 0:
        raise argparse.ArgumentTypeError(f"Invalid natural number '{text}'")
    return value


def _add_param_flags(parser: argparse.ArgumentParser, with_kind: bool) -> None:
    for name in _RATIONAL_FIELDS:
        parser.add_argument(f"--{name}", type=_rational_arg, help="'p/q' or 'p'")
    parser.add_argument("--n", type=_natural_arg, help="top degree N")
    if with_kind:
        parser.add_argument(
            "--kind", choices=[k.value for k in ParamKind], default=None
        )


def _add_trace_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--trace-level",
        choices=[level.name.lower() for level in TraceLevel],
        default="none",
    )
    parser.add_argument("--trace-out", help="write trace events as JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="leonard-trio-lab",
        description="Exact verification of the meta and trio Hahn algebras.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    report = commands.add_parser("report", help="run the full suite")
    _add_param_flags(report, with_kind=True)
    report.add_argument("--config", help="YAML parameter set")
    report.add_argument("--out", help="JSON report path (default: stdout)")
    _add_trace_flags(report)

    sweep = commands.add_parser("sweep", help="run the suite on sampled parameters")
    sweep.add_argument("--kind", choices=[k.value for k in ParamKind], default=None)
    sweep.add_argument("--n-min", type=_natural_arg)
    sweep.add_argument("--n-max", type=_natural_arg)
    sweep.add_argument("--samples", type=_natural_arg)
    sweep.add_argument("--seed", type=int)
    sweep.add_argument("--jobs", type=_natural_arg)
    sweep.add_argument("--config", help="YAML sweep configuration")
    sweep.add_argument("--out", help="JSON report path (default: stdout)")
    _add_trace_flags(sweep)

    for name, help_text in (
        ("eval", "print one exact value"),
        ("table", "export a CSV value table"),
    ):
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("function", choices=[f.value for f in TableFunction])
        _add_param_flags(sub, with_kind=False)
        if name == "eval":
            sub.add_argument("--k", type=_natural_arg, required=True)
            sub.add_argument("--l", type=_natural_arg, required=True)
        else:
            sub.add_argument("--out", help="CSV path (default: stdout)")
    return parser


def _param_set(args: argparse.Namespace) -> ParamSet:
    """
    Parameters from --config, overridden by explicit flags.

    :raises BadFlags: If the combination of fields is invalid.
    """
    fields: dict[str, Any] = {}
    if args.config is not None:
        base = ConfigBuilder().get_params(args.config)
        fields = {"kind": base.kind, "n": base.n}
        fields.update({name: getattr(base, name) for name in _RATIONAL_FIELDS})
    if args.kind is not None:
        fields["kind"] = ParamKind(args.kind)
    for name in ("n", *_RATIONAL_FIELDS):
        value = getattr(args, name)
        if value is not None:
            fields[name] = value
    fields.setdefault("kind", ParamKind.STANDARD)
    if fields.get("n") is None or fields.get("a") is None:
        raise BadFlags("--n and --a are required")
    try:
        return ParamSet(**fields)
    except ValueError as e:
        raise BadFlags(str(e)) from e


def _sweep_config(args: argparse.Namespace) -> SweepConfig:
    cfg = (
        ConfigBuilder().get_sweep(args.config)
        if args.config is not None
        else SweepConfig()
    )
    overrides: dict[str, Any] = {
        name: getattr(args, name)
        for name in ("n_min", "n_max", "samples", "seed", "jobs")
        if getattr(args, name) is not None
    }
    if args.kind is not None:
        overrides["kind"] = ParamKind(args.kind)
    try:
        return replace(cfg, **overrides)
    except ValueError as e:
        raise BadFlags(str(e)) from e


def _hahn_params(args: argparse.Namespace) -> HahnParams:
    function = TableFunction(args.function)
    if args.n is None or args.a is None:
        raise BadFlags("--n and --a are required")
    if getattr(args, function.needs) is None:
        raise BadFlags(f"{function.value} requires --{function.needs}")
    return HahnParams(args.a, args.n, rho=args.rho, c=args.c)


def _summary_line(summary: Summary) -> str:
    return (
        f"total={summary.total} passed={summary.passed} "
        f"failed={summary.failed} skipped={summary.skipped}\n"
    )


def _cmd_report(args: argparse.Namespace, stdout: TextIO) -> ExitCode:
    report = run_suite(_param_set(args))
    if args.out is None:
        stdout.write(dumps_report(report.to_dict()))
    else:
        write_report(report.to_dict(), args.out)
        stdout.write(_summary_line(report.summary))
    return ExitCode.OK if report.ok else ExitCode.CHECK_FAILED


def _cmd_sweep(args: argparse.Namespace, stdout: TextIO) -> ExitCode:
    report = run_sweep(_sweep_config(args))
    if args.out is None:
        stdout.write(dumps_report(report.to_dict()))
    else:
        write_report(report.to_dict(), args.out)
        stdout.write(_summary_line(report.summary))
    return ExitCode.OK if report.ok else ExitCode.CHECK_FAILED


def _cmd_eval(args: argparse.Namespace, stdout: TextIO) -> ExitCode:
    p = _hahn_params(args)
    if args.k > p.n or args.l > p.n:
        raise BadFlags(f"Indices ({args.k}, {args.l}) exceed N = {p.n}")
    value = evaluate(TableFunction(args.function), args.k, args.l, p)
    stdout.write(format_rational(value) + "\n")
    return ExitCode.OK


def _cmd_table(args: argparse.Namespace, stdout: TextIO) -> ExitCode:
    rows = value_table(TableFunction(args.function), _hahn_params(args))
    if args.out is None:
        stdout.write(dumps_table(rows))
    else:
        write_table(rows, args.out)
    return ExitCode.OK


_COMMANDS = {
    "report": _cmd_report,
    "sweep": _cmd_sweep,
    "eval": _cmd_eval,
    "table": _cmd_table,
}


def main(
    argv: list[str] | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    """
    Run the command line.

    Unwritable output paths are reported like bad flags.

    :param argv: Arguments without the program name; sys.argv by default.
    :return: The exit code.
    """
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    argv = _join_negative_values(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
        trace_level = getattr(args, "trace_level", "none")
        set_global_trace_level(TraceLevel[trace_level.upper()])
        code = _COMMANDS[args.command](args, stdout)
        trace_out = getattr(args, "trace_out", None)
        if trace_out is not None:
            export_traces_json(trace_out)
    except (BadFlags, ConfigError) as e:
        stderr.write(f"{e}\n")
        return ExitCode.BAD_FLAGS
    except OSError as e:
        stderr.write(f"Cannot write {e.filename}: {e.strerror}\n")
        return ExitCode.BAD_FLAGS
    except (NonGenericParams, DenominatorVanishes) as e:
        stderr.write(f"{e}\n")
        return ExitCode.NON_GENERIC
    return code
