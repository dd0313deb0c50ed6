"""
Human-readable one-line summaries of pipeline events.
The CLI subscribes a SummaryPrinter to the event bus; output goes to stderr
so that stdout carries only the JSON document.
"""

import sys
from typing import Callable, Dict, Optional, TextIO

from core.events import Event, EventBus, EventType


def _counts(data) -> str:
    return "/".join(str(count) for count in data.get('counts', []))


FORMATTERS: Dict[EventType, Callable[[Dict], str]] = {
    EventType.GRAPH_LOADED: lambda d: (
        f"graph {d['graph']}: {d['vertices']} vertices, {d['edges']} edges, {d['sinks']} sinks"
    ),
    EventType.MODEL_BUILT: lambda d: (
        f"Conf_{d['n']}({d['graph']}): cells {_counts(d)}, dimension {d['dimension']}, "
        f"{d['components']} component(s)"
    ),
    EventType.COMPLEX_COLLAPSED: lambda d: (
        f"collapsed Conf_{d['n']}({d['graph']}) with {d['policy']}: {d['removed']} pairs removed, "
        f"cells {_counts(d)}"
    ),
    EventType.HOMOLOGY_COMPUTED: lambda d: (
        f"H_*(Conf_{d['n']}({d['graph']}); {d['coefficients']}): betti {d['betti']}"
    ),
    EventType.RING_COMPUTED: lambda d: (
        f"H^*(Conf_{d['n']}({d['graph']}); {d['field']}): dims {d['dims']}"
    ),
    EventType.SEARCH_FINISHED: lambda d: (
        f"zcl over {d['field']}: length {d['length']} after {d['nodes']} products"
    ),
    EventType.SEARCH_BUDGET_EXHAUSTED: lambda d: (
        f"zcl over {d['field']}: budget of {d['budget']} exhausted at length {d['length']}"
    ),
    EventType.REPORT_READY: lambda d: (
        f"TC(Conf_{d['n']}({d['graph']})): {d['verdict']} [{d['lower']}, {d['upper']}]"
    ),
    EventType.CHECK_FINISHED: lambda d: f"{d['status']:4} {d['name']}",
}


def summarize(event: Event) -> str:
    formatter = FORMATTERS.get(event.event_type)
    if formatter is None:
        return event.event_type.value
    return formatter(event.data)


class SummaryPrinter:
    """Event subscriber writing one line per event."""

    def __init__(self, stream: Optional[TextIO] = None):
        self.stream = stream

    def __call__(self, event: Event):
        stream = self.stream or sys.stderr
        print(summarize(event), file=stream)

    def attach(self, event_bus: EventBus):
        event_bus.subscribe_all(self)

    def detach(self, event_bus: EventBus):
        for event_type in EventType:
            event_bus.unsubscribe(event_type, self)
