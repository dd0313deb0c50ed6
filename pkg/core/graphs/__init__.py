"""Graphs with sinks: representation, documents and surgeries."""

from .graph import (
    GraphWithSinks,
    Quotient,
    VertexClassification,
    articulation_quotient,
    articulations_brute_force,
    classify,
    subdivide_edge,
)
from .io import dumps_graph, load_graph, parse_graph, serialize_graph

__all__ = [
    'GraphWithSinks', 'Quotient', 'VertexClassification',
    'articulation_quotient', 'articulations_brute_force', 'classify', 'subdivide_edge',
    'dumps_graph', 'load_graph', 'parse_graph', 'serialize_graph',
]
