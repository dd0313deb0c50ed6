"""
Graph documents: parsing, normalization and canonical serialization.

Document format:
    {"name": "Y",                       optional
     "allow_bivalent": false,           optional
     "vertices": [{"id": "c", "sink": false}, ...],
     "edges": [["c", "l1"], ...]}

Self-loops are subdivided on ingest by a fresh non-sink vertex flagged
"subdivision"; the loop keeps its edge id for the first half and the second
half is appended after all declared edges.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from ..errors import GraphFormatError
from .graph import GraphWithSinks, fresh_name

logger = logging.getLogger(__name__)

Document = Union[str, bytes, Mapping[str, Any]]


def _decode(document: Document) -> Mapping[str, Any]:
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"graph document is not valid JSON: {exc}") from exc
    if not isinstance(document, Mapping):
        raise GraphFormatError("graph document must be an object")
    return document


def parse_graph(document: Document, allow_bivalent: Optional[bool] = None) -> GraphWithSinks:
    """Parse and normalize a graph document.

    Args:
        document: JSON text or an already decoded mapping.
        allow_bivalent: Overrides the document's "allow_bivalent" flag.

    Returns:
        GraphWithSinks: The normalized graph with ids in input order.

    Raises:
        GraphFormatError: Malformed document, duplicate vertex ids or
            edges naming undeclared vertices.
    """
    data = _decode(document)

    vertices = data.get("vertices")
    if not isinstance(vertices, list):
        raise GraphFormatError("'vertices' must be a list")
    names: List[str] = []
    sinks: List[bool] = []
    subdivision: List[bool] = []
    ids: Dict[str, int] = {}
    for position, entry in enumerate(vertices):
        if not isinstance(entry, Mapping) or not isinstance(entry.get("id"), str):
            raise GraphFormatError(f"vertex entry {position} needs a string 'id'")
        vertex_name = entry["id"]
        if vertex_name in ids:
            raise GraphFormatError(f"duplicate vertex id {vertex_name!r}")
        sink = entry.get("sink", False)
        flagged = entry.get("subdivision", False)
        if not isinstance(sink, bool) or not isinstance(flagged, bool):
            raise GraphFormatError(f"vertex {vertex_name!r}: flags must be booleans")
        ids[vertex_name] = len(names)
        names.append(vertex_name)
        sinks.append(sink)
        subdivision.append(flagged)

    edges_doc = data.get("edges")
    if not isinstance(edges_doc, list):
        raise GraphFormatError("'edges' must be a list")
    edges: List[Tuple[int, int]] = []
    loops: List[int] = []
    for position, entry in enumerate(edges_doc):
        if (
            not isinstance(entry, (list, tuple))
            or len(entry) != 2
            or not all(isinstance(end, str) for end in entry)
        ):
            raise GraphFormatError(f"edge entry {position} must be a pair of vertex ids")
        for end in entry:
            if end not in ids:
                raise GraphFormatError(f"edge {position} names undeclared vertex {end!r}")
        a, b = ids[entry[0]], ids[entry[1]]
        if a == b:
            loops.append(position)
        edges.append((a, b))

    taken = set(names)
    for position in loops:
        anchor = edges[position][0]
        loop_vertex = fresh_name(taken, f"{names[anchor]}.loop{position}")
        taken.add(loop_vertex)
        fresh = len(names)
        names.append(loop_vertex)
        sinks.append(False)
        subdivision.append(True)
        edges[position] = (anchor, fresh)
        edges.append((fresh, anchor))

    flag = data.get("allow_bivalent", False)
    if not isinstance(flag, bool):
        raise GraphFormatError("'allow_bivalent' must be a boolean")
    if allow_bivalent is not None:
        flag = allow_bivalent
    label = data.get("name", "")
    if not isinstance(label, str):
        raise GraphFormatError("'name' must be a string")

    graph = GraphWithSinks(
        names=tuple(names),
        sinks=tuple(sinks),
        edges=tuple(edges),
        subdivision=tuple(subdivision),
        allow_bivalent=flag,
        name=label,
    )
    if loops:
        logger.debug("Subdivided %d self-loop(s) in %s", len(loops), graph.label())
    if graph.vertex_count and not graph.is_connected:
        logger.warning(
            "Graph %s has %d components; only homology is meaningful",
            graph.label(), graph.component_count,
        )
    return graph


def serialize_graph(g: GraphWithSinks) -> Dict[str, Any]:
    """Canonical document for g: vertices and edges in id order."""
    vertices = []
    for vertex, vertex_name in enumerate(g.names):
        entry: Dict[str, Any] = {"id": vertex_name, "sink": g.sinks[vertex]}
        if g.subdivision[vertex]:
            entry["subdivision"] = True
        vertices.append(entry)
    document: Dict[str, Any] = {
        "vertices": vertices,
        "edges": [[g.names[a], g.names[b]] for a, b in g.edges],
    }
    if g.name:
        document["name"] = g.name
    if g.allow_bivalent:
        document["allow_bivalent"] = True
    return document


def dumps_graph(g: GraphWithSinks) -> str:
    return json.dumps(serialize_graph(g), indent=2, sort_keys=True) + "\n"


def load_graph(path: Union[str, Path], allow_bivalent: Optional[bool] = None) -> GraphWithSinks:
    """Read a graph document from disk; the file stem names unnamed graphs."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphFormatError(f"cannot read graph document {path}: {exc}") from exc
    data = dict(_decode(text))
    data.setdefault("name", path.stem)
    return parse_graph(data, allow_bivalent=allow_bivalent)
