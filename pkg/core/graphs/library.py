"""
Factory functions for the standard graphs.
Each factory builds a document and runs it through parse_graph, so the
result is identical to loading the matching fixture under data/graphs.
"""

from typing import Any, Dict, Iterable, List, Sequence, Tuple

from ..errors import InvalidGraphError
from .graph import GraphWithSinks
from .io import parse_graph


def _document(
    name: str,
    vertices: Sequence[str],
    edges: Iterable[Tuple[str, str]],
    sinks: Iterable[str] = (),
    allow_bivalent: bool = False,
) -> Dict[str, Any]:
    sink_set = set(sinks)
    document: Dict[str, Any] = {
        "name": name,
        "vertices": [{"id": vertex, "sink": vertex in sink_set} for vertex in vertices],
        "edges": [[a, b] for a, b in edges],
    }
    if allow_bivalent:
        document["allow_bivalent"] = True
    return document


def banana(k: int) -> GraphWithSinks:
    """B_k: two vertices joined by k parallel edges."""
    if k < 1:
        raise InvalidGraphError("a banana graph needs at least one edge")
    return parse_graph(_document(f"B{k}", ["u", "v"], [("u", "v")] * k, allow_bivalent=k == 2))


def star_graph(k: int, l: int, name: str = "") -> GraphWithSinks:
    """Y^l_k: k leaf edges and l loops wedged at one center vertex."""
    if k + 2 * l < 1:
        raise InvalidGraphError("a star needs at least one edge")
    leaves = [f"l{i}" for i in range(1, k + 1)]
    edges: List[Tuple[str, str]] = [("c", leaf) for leaf in leaves]
    edges.extend(("c", "c") for _ in range(l))
    return parse_graph(
        _document(name or f"Y{k}_{l}", ["c", *leaves], edges, allow_bivalent=k + 2 * l == 2)
    )


def y_graph() -> GraphWithSinks:
    return star_graph(3, 0, name="Y")


def h_graph() -> GraphWithSinks:
    """Two essential vertices joined by an edge, each carrying two leaves."""
    return parse_graph(
        _document(
            "H",
            ["L", "R", "l1", "l2", "r1", "r2"],
            [("L", "l1"), ("L", "l2"), ("L", "R"), ("R", "r1"), ("R", "r2")],
        )
    )


def interval_with_sinks() -> GraphWithSinks:
    """The unit interval with both endpoints sinks."""
    return parse_graph(_document("I2sinks", ["0", "1"], [("0", "1")], sinks=["0", "1"]))


def bowtie() -> GraphWithSinks:
    """Two triangles sharing the vertex v."""
    return parse_graph(
        _document(
            "bowtie",
            ["v", "a1", "a2", "b1", "b2"],
            [("v", "a1"), ("a1", "a2"), ("a2", "v"), ("v", "b1"), ("b1", "b2"), ("b2", "v")],
            allow_bivalent=True,
        )
    )


def figure_eight() -> GraphWithSinks:
    """Two loops at one vertex."""
    return parse_graph(_document("figure8", ["v"], [("v", "v"), ("v", "v")]))


def tree(name: str, edges: Sequence[Tuple[str, str]]) -> GraphWithSinks:
    """A tree given by its edge list; vertices appear in first-mention order."""
    vertices: List[str] = []
    for a, b in edges:
        for vertex in (a, b):
            if vertex not in vertices:
                vertices.append(vertex)
    graph = parse_graph(_document(name, vertices, edges))
    if not graph.is_tree:
        raise InvalidGraphError(f"{name} is not a tree")
    return graph
