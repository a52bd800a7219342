"""
Tracing core for the Leonard trio laboratory.

Collects level-filtered, structured events about realizations, basis
constructions, verification checks and sweep samples. Events carry wall-clock
timestamps and are kept apart from the deterministic verification report.
"""

import json
import os
from abc import ABC, abstractmethod
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional


class TraceLevel(Enum):
    """
    How much is recorded. Every level includes the events of the lower ones.
    """

    NONE = 0
    CHECKS = 1  # check outcomes
    OPERATORS = 2  # + realizations and basis constructions
    FULL = 3  # + sweep samples


class TraceEventType(Enum):
    CHECK_PASS = "check_pass"
    CHECK_FAIL = "check_fail"
    CHECK_SKIP = "check_skip"
    REALIZE = "realize"
    BASIS_BUILD = "basis_build"
    SAMPLE_START = "sample_start"
    SAMPLE_END = "sample_end"


_EVENT_MIN_LEVELS = {
    TraceEventType.CHECK_PASS: TraceLevel.CHECKS,
    TraceEventType.CHECK_FAIL: TraceLevel.CHECKS,
    TraceEventType.CHECK_SKIP: TraceLevel.CHECKS,
    TraceEventType.REALIZE: TraceLevel.OPERATORS,
    TraceEventType.BASIS_BUILD: TraceLevel.OPERATORS,
    TraceEventType.SAMPLE_START: TraceLevel.FULL,
    TraceEventType.SAMPLE_END: TraceLevel.FULL,
}


@dataclass
class TraceEvent(ABC):
    """
    One recorded event.

    Attributes:
        timestamp (float):
            Seconds since epoch at emission.
        event_type (TraceEventType):
            Kind of the event, which also decides its minimum level.
        source (str):
            The operation that emitted the event (e.g. "realize", "run_suite").
        run_id (str):
            Label of the parameter set being processed, for sweeps over many
            samples.
    """

    timestamp: float
    event_type: TraceEventType
    source: str
    run_id: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "timestamp": self.timestamp,
            "event_type": self.event_type.value,
            "source": self.source,
            "run_id": self.run_id,
            "details": self.details,
        }

    @property
    def details(self) -> Dict[str, Any]:
        return self._get_details()

    @abstractmethod
    def _get_details(self) -> Dict[str, Any]:
        """Payload specific to the event kind."""


class TraceCollector:
    """
    Keeps the events allowed by its level, in emission order.
    """

    def __init__(self, level: TraceLevel = TraceLevel.NONE):
        self.level = level
        self.events: List[TraceEvent] = []

    def set_level(self, level: TraceLevel) -> None:
        self.level = level

    def clear(self) -> None:
        self.events.clear()

    def record_event(self, event: TraceEvent) -> None:
        if self.should_record_event_type(event.event_type):
            self.events.append(event)

    def should_record_event_type(self, event_type: TraceEventType) -> bool:
        """
        Whether the current level admits events of this kind.

        Emitters call this before building an event, so nothing is allocated
        while tracing is off.
        """
        if self.level is TraceLevel.NONE:
            return False
        min_level = _EVENT_MIN_LEVELS.get(event_type, TraceLevel.FULL)
        return self.level.value >= min_level.value

    def get_events(
        self,
        event_type: Optional[TraceEventType] = None,
        run_id: Optional[str] = None,
    ) -> List[TraceEvent]:
        """
        Recorded events, optionally restricted to one kind and one run.

        Args:
            event_type (Optional[TraceEventType], optional):
                Kind to keep. None keeps every kind.
            run_id (Optional[str], optional):
                Parameter set label (or sweep) to keep. None keeps every run.

        Returns:
            List[TraceEvent]: The matching events, in emission order.
        """
        return [
            e
            for e in self.events
            if (event_type is None or e.event_type == event_type)
            and (run_id is None or e.run_id == run_id)
        ]

    def failed_checks(self) -> List[str]:
        """
        Names of the checks recorded as failed, across every run.
        """
        return [
            e.details["name"]
            for e in self.events
            if e.event_type == TraceEventType.CHECK_FAIL
        ]

    def counts(self) -> Dict[str, int]:
        """
        Number of recorded events per kind, keyed by the kind's value.
        """
        return dict(Counter(e.event_type.value for e in self.events))

    def export_json(self, filepath: str) -> None:
        """
        Write every recorded event as a JSON array, creating the parent
        directory if needed.
        """
        base_dir = os.path.dirname(filepath)
        if base_dir:
            os.makedirs(base_dir, exist_ok=True)
        with open(filepath, "w", encoding="utf-8") as file:
            json.dump([e.to_dict() for e in self.events], file, indent=2)


_global_collector = TraceCollector()


def get_global_collector() -> TraceCollector:
    return _global_collector


def set_global_trace_level(level: TraceLevel) -> None:
    _global_collector.set_level(level)


def clear_traces() -> None:
    _global_collector.clear()


def export_traces_json(filepath: str) -> None:
    _global_collector.export_json(filepath)
