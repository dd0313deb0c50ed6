"""
Event system for decoupled communication.
Framework-agnostic event bus announcing pipeline milestones.

Publishers build a typed payload (ModelBuilt, CheckFinished, ...) and wrap
it with Event.of; subscribers read the plain `data` dict or ask for the
payload back with Event.payload().
"""

from typing import Any, Callable, ClassVar, Dict, List, Optional, Type
from dataclasses import asdict, dataclass
from enum import Enum


class EventType(Enum):
    """Enumeration of pipeline events."""
    # Input
    GRAPH_LOADED = "GRAPH_LOADED"

    # Model construction
    MODEL_BUILT = "MODEL_BUILT"
    COMPLEX_COLLAPSED = "COMPLEX_COLLAPSED"

    # Algebra
    HOMOLOGY_COMPUTED = "HOMOLOGY_COMPUTED"
    RING_COMPUTED = "RING_COMPUTED"

    # Zero-divisor search
    SEARCH_FINISHED = "SEARCH_FINISHED"
    SEARCH_BUDGET_EXHAUSTED = "SEARCH_BUDGET_EXHAUSTED"

    # Results
    REPORT_READY = "REPORT_READY"
    CHECK_FINISHED = "CHECK_FINISHED"


@dataclass(frozen=True)
class GraphLoaded:
    event_type: ClassVar[EventType] = EventType.GRAPH_LOADED
    graph: str
    vertices: int
    edges: int
    sinks: int


@dataclass(frozen=True)
class ModelBuilt:
    event_type: ClassVar[EventType] = EventType.MODEL_BUILT
    graph: str
    n: int
    counts: List[int]
    dimension: int
    components: int


@dataclass(frozen=True)
class ComplexCollapsed:
    event_type: ClassVar[EventType] = EventType.COMPLEX_COLLAPSED
    graph: str
    n: int
    policy: str
    removed: int
    counts: List[int]
    dimension: int


@dataclass(frozen=True)
class HomologyComputed:
    event_type: ClassVar[EventType] = EventType.HOMOLOGY_COMPUTED
    graph: str
    n: int
    coefficients: str
    betti: List[int]


@dataclass(frozen=True)
class RingComputed:
    event_type: ClassVar[EventType] = EventType.RING_COMPUTED
    graph: str
    n: int
    field: str
    dims: List[int]


@dataclass(frozen=True)
class SearchFinished:
    event_type: ClassVar[EventType] = EventType.SEARCH_FINISHED
    graph: str
    n: int
    field: str
    length: int
    nodes: int


@dataclass(frozen=True)
class SearchBudgetExhausted:
    """A zcl search ran out of multiplications; `length` is still a valid bound."""
    event_type: ClassVar[EventType] = EventType.SEARCH_BUDGET_EXHAUSTED
    graph: str
    n: int
    field: str
    budget: int
    length: int


@dataclass(frozen=True)
class ReportReady:
    """Bounds are None for an infinite verdict."""
    event_type: ClassVar[EventType] = EventType.REPORT_READY
    graph: str
    n: int
    verdict: str
    lower: Optional[int]
    upper: Optional[int]


@dataclass(frozen=True)
class CheckFinished:
    event_type: ClassVar[EventType] = EventType.CHECK_FINISHED
    name: str
    kind: str
    status: str


PAYLOADS: Dict[EventType, Type[Any]] = {
    cls.event_type: cls
    for cls in (
        GraphLoaded, ModelBuilt, ComplexCollapsed, HomologyComputed, RingComputed,
        SearchFinished, SearchBudgetExhausted, ReportReady, CheckFinished,
    )
}


@dataclass(frozen=True)
class Event:
    """Base event class.

    Note: Uses frozen=True to make the dataclass immutable,
    and creates a copy of data to ensure it cannot be modified.
    """
    event_type: EventType
    data: Dict[str, Any]

    def __post_init__(self):
        """Copy data so later changes by the publisher do not leak in."""
        object.__setattr__(self, 'data', dict(self.data))

    @classmethod
    def of(cls, payload: Any) -> "Event":
        """Wrap a typed payload; its fields become the data dict."""
        return cls(payload.event_type, asdict(payload))

    def payload(self) -> Any:
        """The typed payload of this event.

        Raises:
            TypeError: If the data does not match the payload fields.
        """
        return PAYLOADS[self.event_type](**self.data)


class EventBus:
    """
    Central event bus for publish-subscribe pattern.
    Lets the CLI and tests observe the pipeline without coupling to it.
    """

    def __init__(self):
        self._subscribers: Dict[EventType, List[Callable]] = {}

    def subscribe(self, event_type: EventType, callback: Callable):
        """
        Subscribe to an event type.
        Callback will be called when event is published.
        """
        if event_type not in self._subscribers:
            self._subscribers[event_type] = []
        self._subscribers[event_type].append(callback)

    def subscribe_all(self, callback: Callable):
        """Subscribe one callback to every event type."""
        for event_type in EventType:
            self.subscribe(event_type, callback)

    def unsubscribe(self, event_type: EventType, callback: Callable):
        """Unsubscribe from an event type."""
        if event_type in self._subscribers:
            if callback in self._subscribers[event_type]:
                self._subscribers[event_type].remove(callback)

    def publish(self, event: Event):
        """
        Publish an event to all subscribers.
        """
        for callback in list(self._subscribers.get(event.event_type, [])):
            callback(event)

    def publish_payload(self, payload: Any):
        self.publish(Event.of(payload))

    def clear(self):
        """Clear all subscriptions."""
        self._subscribers.clear()


# Global event bus instance
EVENT_BUS = EventBus()
