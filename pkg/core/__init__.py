"""
ConfTC Core Engine
Framework-agnostic topology of graph configuration spaces with sinks.
"""

from .errors import ConfTCError
from .events import EventBus, Event, EventType, EVENT_BUS
from .session import Session
from .settings import EngineSettings, DEFAULT_SETTINGS

__all__ = [
    'ConfTCError', 'EventBus', 'Event', 'EventType', 'EVENT_BUS',
    'Session', 'EngineSettings', 'DEFAULT_SETTINGS',
]
