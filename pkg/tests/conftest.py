"""Pytest configuration and shared fixtures."""
from pathlib import Path

import pytest

from core.events import EventType, Event, EVENT_BUS
from core.graphs import library
from core.model.complex import build_model
from core.session import Session
from core.settings import EngineSettings

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def mock_event_bus():
    """Create a fresh event bus for testing."""
    from core.events import EventBus
    return EventBus()


@pytest.fixture
def session(mock_event_bus):
    """Create a session with default settings on a private bus."""
    return Session(EngineSettings(), event_bus=mock_event_bus)


@pytest.fixture
def fixtures_dir():
    """Directory of the shipped graph documents."""
    return DATA_DIR / "graphs"


@pytest.fixture
def suite_path():
    """The shipped acceptance suite."""
    return DATA_DIR / "acceptance.json"


@pytest.fixture
def y_graph():
    return library.y_graph()


@pytest.fixture
def h_graph():
    return library.h_graph()


@pytest.fixture
def interval_sinks():
    """The unit interval with both endpoints sinks."""
    return library.interval_with_sinks()


@pytest.fixture
def bowtie():
    return library.bowtie()


@pytest.fixture
def banana3():
    return library.banana(3)


@pytest.fixture
def banana4():
    return library.banana(4)


@pytest.fixture
def y_model(y_graph):
    """Conf_2(Y): 18 vertices and 18 edges."""
    return build_model(y_graph, 2)


@pytest.fixture
def b4_model(banana4):
    """Conf_3(B_4), a closed surface of genus 13 up to homotopy."""
    return build_model(banana4, 3)


@pytest.fixture
def sample_event_data():
    """Sample event data for testing."""
    return {"graph": "Y", "n": 2, "counts": [18, 18]}


@pytest.fixture
def events_with_data(mock_event_bus, sample_event_data):
    """Create sample events for testing."""
    return Event(EventType.MODEL_BUILT, sample_event_data)


@pytest.fixture(autouse=True)
def clean_event_bus():
    """Clean the global event bus before and after each test."""
    EVENT_BUS.clear()
    yield
    EVENT_BUS.clear()
