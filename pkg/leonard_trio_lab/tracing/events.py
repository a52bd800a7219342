"""
Specific trace event classes and convenience functions.

Each convenience function checks the global collector level before building
its event, so that tracing costs nothing when disabled.
"""

from dataclasses import dataclass
import time
from typing import Any, Dict

from typing_extensions import override

from .tracing_core import TraceEvent, TraceEventType, get_global_collector


@dataclass
class CheckEvent(TraceEvent):
    """
    Event for the outcome of one verification check.

    Attributes:
        name (str):
            The name of the check, as it appears in the report.
        family (str):
            The group of checks it belongs to (e.g. "meta", "connection").
        detail (dict[str, str]):
            Residual data or the skip reason, values rendered as strings.
    """

    name: str
    family: str
    detail: dict[str, str]

    def __init__(
        self,
        event_type: TraceEventType,
        name: str,
        family: str,
        detail: dict[str, str],
        source: str = "",
        run_id: str = "",
    ):
        assert event_type in (
            TraceEventType.CHECK_PASS,
            TraceEventType.CHECK_FAIL,
            TraceEventType.CHECK_SKIP,
        ), f"{event_type} is not a check outcome"
        super().__init__(
            timestamp=time.time(),
            event_type=event_type,
            source=source,
            run_id=run_id,
        )
        self.name = name
        self.family = family
        self.detail = detail

    @override
    def _get_details(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "family": self.family,
            "detail": dict(self.detail),
        }


@dataclass
class RealizeEvent(TraceEvent):
    """
    Event for the construction of an operator realization.

    Attributes:
        kind (str):
            The realization kind (standard, general or jacobi).
        n (int):
            The top degree of the polynomial space.
        operators (list[str]):
            The names of the operators that were built.
    """

    kind: str
    n: int
    operators: list[str]

    def __init__(
        self,
        kind: str,
        n: int,
        operators: list[str],
        source: str = "",
        run_id: str = "",
    ):
        super().__init__(
            timestamp=time.time(),
            event_type=TraceEventType.REALIZE,
            source=source,
            run_id=run_id,
        )
        self.kind = kind
        self.n = n
        self.operators = operators

    @override
    def _get_details(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "n": self.n,
            "operators": list(self.operators),
        }


@dataclass
class BasisBuildEvent(TraceEvent):
    """
    Event for the construction of a distinguished basis.

    Attributes:
        basis_kind (str):
            The basis family (a, b, c, d or s).
        n (int):
            The top degree of the polynomial space.
    """

    basis_kind: str
    n: int

    def __init__(
        self,
        basis_kind: str,
        n: int,
        source: str = "",
        run_id: str = "",
    ):
        super().__init__(
            timestamp=time.time(),
            event_type=TraceEventType.BASIS_BUILD,
            source=source,
            run_id=run_id,
        )
        self.basis_kind = basis_kind
        self.n = n

    @override
    def _get_details(self) -> Dict[str, Any]:
        return {"basis_kind": self.basis_kind, "n": self.n}


@dataclass
class SampleStartEvent(TraceEvent):
    """
    Event for the start of one sweep sample.

    Attributes:
        n (int):
            The top degree of the polynomial space.
        index (int):
            The index of the sample within its degree.
        params (dict[str, str]):
            The sampled parameters, as "p/q" strings.
    """

    n: int
    index: int
    params: dict[str, str]

    def __init__(
        self,
        n: int,
        index: int,
        params: dict[str, str],
        source: str = "",
        run_id: str = "",
    ):
        super().__init__(
            timestamp=time.time(),
            event_type=TraceEventType.SAMPLE_START,
            source=source,
            run_id=run_id,
        )
        self.n = n
        self.index = index
        self.params = params

    @override
    def _get_details(self) -> Dict[str, Any]:
        return {"n": self.n, "index": self.index, "params": dict(self.params)}


@dataclass
class SampleEndEvent(TraceEvent):
    """
    Event for the end of one sweep sample.

    Attributes:
        n (int):
            The top degree of the polynomial space.
        index (int):
            The index of the sample within its degree.
        failed (int):
            The number of failed checks of the sample.
    """

    n: int
    index: int
    failed: int

    def __init__(
        self,
        n: int,
        index: int,
        failed: int,
        source: str = "",
        run_id: str = "",
    ):
        super().__init__(
            timestamp=time.time(),
            event_type=TraceEventType.SAMPLE_END,
            source=source,
            run_id=run_id,
        )
        self.n = n
        self.index = index
        self.failed = failed

    @override
    def _get_details(self) -> Dict[str, Any]:
        return {"n": self.n, "index": self.index, "failed": self.failed}


def trace_check(
    event_type: TraceEventType,
    name: str,
    family: str,
    detail: dict[str, str],
    source: str = "",
    run_id: str = "",
) -> None:
    """
    Trace the outcome of a verification check.

    Args:
        event_type (TraceEventType):
            CHECK_PASS, CHECK_FAIL or CHECK_SKIP.
        name (str):
            The name of the check.
        family (str):
            The group of checks it belongs to.
        detail (dict[str, str]):
            Residual data or the skip reason.
        source (str, optional):
            The source of the event. Defaults to "".
        run_id (str, optional):
            The label of the parameter set. Defaults to "".
    """
    collector = get_global_collector()
    if not collector.should_record_event_type(event_type):
        return
    collector.record_event(
        CheckEvent(event_type, name, family, detail, source, run_id)
    )


def trace_realize(
    kind: str,
    n: int,
    operators: list[str],
    source: str = "",
    run_id: str = "",
) -> None:
    """
    Trace the construction of a realization.

    Args:
        kind (str):
            The realization kind.
        n (int):
            The top degree of the polynomial space.
        operators (list[str]):
            The names of the operators that were built.
        source (str, optional):
            The source of the event. Defaults to "".
        run_id (str, optional):
            The label of the parameter set. Defaults to "".
    """
    collector = get_global_collector()
    if not collector.should_record_event_type(TraceEventType.REALIZE):
        return
    collector.record_event(RealizeEvent(kind, n, operators, source, run_id))


def trace_basis_build(
    basis_kind: str,
    n: int,
    source: str = "",
    run_id: str = "",
) -> None:
    collector = get_global_collector()
    if not collector.should_record_event_type(TraceEventType.BASIS_BUILD):
        return
    collector.record_event(BasisBuildEvent(basis_kind, n, source, run_id))


def trace_sample_start(
    n: int,
    index: int,
    params: dict[str, str],
    source: str = "",
    run_id: str = "",
) -> None:
    """
    Trace the start of a sweep sample.

    Args:
        n (int):
            The top degree of the polynomial space.
        index (int):
            The index of the sample within its degree.
        params (dict[str, str]):
            The sampled parameters.
        source (str, optional):
            The source of the event. Defaults to "".
        run_id (str, optional):
            The label of the parameter set. Defaults to "".
    """
    collector = get_global_collector()
    if not collector.should_record_event_type(TraceEventType.SAMPLE_START):
        return
    collector.record_event(SampleStartEvent(n, index, params, source, run_id))


def trace_sample_end(
    n: int,
    index: int,
    failed: int,
    source: str = "",
    run_id: str = "",
) -> None:
    collector = get_global_collector()
    if not collector.should_record_event_type(TraceEventType.SAMPLE_END):
        return
    collector.record_event(SampleEndEvent(n, index, failed, source, run_id))
