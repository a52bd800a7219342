"""
Level-filtered structured events for check outcomes, realizations, basis
constructions and sweep samples.
"""

from .events import (
    BasisBuildEvent,
    CheckEvent,
    RealizeEvent,
    SampleEndEvent,
    SampleStartEvent,
    trace_basis_build,
    trace_check,
    trace_realize,
    trace_sample_end,
    trace_sample_start,
)
from .tracing_core import (
    TraceCollector,
    TraceEvent,
    TraceEventType,
    TraceLevel,
    clear_traces,
    export_traces_json,
    get_global_collector,
    set_global_trace_level,
)

__all__ = [
    "BasisBuildEvent",
    "CheckEvent",
    "RealizeEvent",
    "SampleEndEvent",
    "SampleStartEvent",
    "TraceCollector",
    "TraceEvent",
    "TraceEventType",
    "TraceLevel",
    "clear_traces",
    "export_traces_json",
    "get_global_collector",
    "set_global_trace_level",
    "trace_basis_build",
    "trace_check",
    "trace_realize",
    "trace_sample_end",
    "trace_sample_start",
]
