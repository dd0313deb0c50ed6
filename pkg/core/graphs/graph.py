"""
Graphs with sink vertices and the surgeries performed on them.
Framework-agnostic: plain immutable values, networkx for connectivity.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx

from ..errors import InvalidGraphError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GraphWithSinks:
    """Finite multigraph with a designated set of sink vertices.

    Vertices and edges carry dense integer ids (their position in `names` and
    `edges`). Each edge is an ordered pair; the order only fixes which
    endpoint slot 0 is adjacent to.

    Attributes:
        names: Vertex names, indexed by vertex id.
        sinks: Sink flag per vertex.
        edges: Endpoint pairs per edge id. Parallel edges are allowed,
            self-loops are not.
        subdivision: Per vertex, True when the vertex was created by a
            subdivision and is therefore allowed to have valence 2.
        allow_bivalent: Permit declared non-sink vertices of valence 2.
        name: Optional label used in reports.
    """

    names: Tuple[str, ...]
    sinks: Tuple[bool, ...]
    edges: Tuple[Tuple[int, int], ...]
    subdivision: Tuple[bool, ...] = ()
    allow_bivalent: bool = False
    name: str = ""

    def __post_init__(self):
        count = len(self.names)
        if not self.subdivision:
            object.__setattr__(self, "subdivision", (False,) * count)
        if len(self.sinks) != count or len(self.subdivision) != count:
            raise InvalidGraphError("per-vertex tuples must all have one entry per vertex")
        if len(set(self.names)) != count:
            raise InvalidGraphError("vertex names must be unique")
        for index, (a, b) in enumerate(self.edges):
            if not (0 <= a < count and 0 <= b < count):
                raise InvalidGraphError(f"edge {index} has an endpoint outside the vertex range")
            if a == b:
                raise InvalidGraphError(f"edge {index} is a self-loop; subdivide it first")
        if not self.allow_bivalent:
            for vertex in range(count):
                if (
                    not self.sinks[vertex]
                    and not self.subdivision[vertex]
                    and self.valence[vertex] == 2
                ):
                    raise InvalidGraphError(
                        f"vertex {self.names[vertex]!r} is a non-sink vertex of valence 2 "
                        "(set allow_bivalent to permit it)"
                    )

    # ------------------------------------------------------------------
    # Basic structure
    # ------------------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self.names)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def valence(self) -> Tuple[int, ...]:
        counts = [0] * self.vertex_count
        for a, b in self.edges:
            counts[a] += 1
            counts[b] += 1
        return tuple(counts)

    @cached_property
    def incident_edges(self) -> Tuple[Tuple[int, ...], ...]:
        """Edge ids incident to each vertex, in edge-id order."""
        incident: List[List[int]] = [[] for _ in range(self.vertex_count)]
        for index, (a, b) in enumerate(self.edges):
            incident[a].append(index)
            incident[b].append(index)
        return tuple(tuple(edges) for edges in incident)

    def other_endpoint(self, edge: int, vertex: int) -> int:
        a, b = self.edges[edge]
        if vertex == a:
            return b
        if vertex == b:
            return a
        raise InvalidGraphError(f"vertex {vertex} is not an endpoint of edge {edge}")

    def vertex_id(self, name: str) -> int:
        try:
            return self._ids[name]
        except KeyError:
            raise InvalidGraphError(f"unknown vertex {name!r}") from None

    @cached_property
    def _ids(self) -> Dict[str, int]:
        return {name: index for index, name in enumerate(self.names)}

    def is_sink(self, vertex: int) -> bool:
        return self.sinks[vertex]

    # ------------------------------------------------------------------
    # Derived vertex and edge sets
    # ------------------------------------------------------------------

    @cached_property
    def sink_set(self) -> FrozenSet[int]:
        return frozenset(v for v in range(self.vertex_count) if self.sinks[v])

    @cached_property
    def essential(self) -> FrozenSet[int]:
        """V_{>=3}: non-sink vertices of valence at least 3."""
        return frozenset(
            v for v in range(self.vertex_count) if not self.sinks[v] and self.valence[v] >= 3
        )

    @cached_property
    def hosts(self) -> FrozenSet[int]:
        """V_{>=2}: non-sink vertices of valence at least 2."""
        return frozenset(
            v for v in range(self.vertex_count) if not self.sinks[v] and self.valence[v] >= 2
        )

    @cached_property
    def sink_edges(self) -> FrozenSet[int]:
        """E_W: edges whose endpoints are both sinks."""
        return frozenset(
            e for e, (a, b) in enumerate(self.edges) if self.sinks[a] and self.sinks[b]
        )

    def touches_sink(self, edge: int) -> bool:
        a, b = self.edges[edge]
        return self.sinks[a] or self.sinks[b]

    # ------------------------------------------------------------------
    # Topology
    # ------------------------------------------------------------------

    def to_networkx(self) -> nx.MultiGraph:
        """Multigraph on vertex ids with edges keyed by edge id."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.vertex_count))
        for index, (a, b) in enumerate(self.edges):
            graph.add_edge(a, b, key=index)
        return graph

    @cached_property
    def component_count(self) -> int:
        if self.vertex_count == 0:
            return 0
        return nx.number_connected_components(self.to_networkx())

    @property
    def is_connected(self) -> bool:
        return self.component_count == 1

    @property
    def first_betti(self) -> int:
        return self.edge_count - self.vertex_count + self.component_count

    @property
    def is_tree(self) -> bool:
        return self.is_connected and self.first_betti == 0

    @property
    def is_interval(self) -> bool:
        """A tree without essential vertices, i.e. homeomorphic to [0, 1]."""
        return self.is_tree and not self.sink_set and not self.essential and self.edge_count > 0

    @property
    def is_y_shaped(self) -> bool:
        """A tree homeomorphic to the Y graph."""
        if not self.is_tree or self.sink_set or len(self.essential) != 1:
            return False
        (center,) = self.essential
        return self.valence[center] == 3

    @property
    def banana_width(self) -> Optional[int]:
        """k when the graph is B_k without sinks, otherwise None."""
        if self.vertex_count != 2 or self.sink_set or self.edge_count == 0:
            return None
        return self.edge_count

    def label(self) -> str:
        return self.name or "G"


@dataclass(frozen=True)
class VertexClassification:
    """Essential vertices, articulations and the fully-articulated flag."""

    essential: FrozenSet[int]
    articulations: FrozenSet[int]
    fully_articulated: bool


def articulations_brute_force(g: GraphWithSinks) -> FrozenSet[int]:
    """Articulations found by deleting each vertex and counting components."""
    base = g.to_networkx()
    reference = nx.number_connected_components(base)
    found = set()
    for vertex in range(g.vertex_count):
        reduced = base.copy()
        reduced.remove_node(vertex)
        if reduced.number_of_nodes() and nx.number_connected_components(reduced) > reference:
            found.add(vertex)
    return frozenset(found)


def classify(g: GraphWithSinks) -> VertexClassification:
    """Classify vertices by valence and by whether they disconnect the graph."""
    simple = nx.Graph(g.to_networkx())
    articulations = frozenset(nx.articulation_points(simple))
    essential = g.essential
    return VertexClassification(
        essential=essential,
        articulations=articulations,
        fully_articulated=essential <= articulations,
    )


def fresh_name(taken: set, stem: str) -> str:
    candidate = stem
    counter = 1
    while candidate in taken:
        counter += 1
        candidate = f"{stem}{counter}"
    return candidate


def subdivide_edge(g: GraphWithSinks, e: int, sink_flag: bool) -> GraphWithSinks:
    """Replace edge e = (a, b) by (a, x) at position e and (x, b) appended last."""
    if not 0 <= e < g.edge_count:
        raise InvalidGraphError(f"unknown edge {e}")
    a, b = g.edges[e]
    fresh = g.vertex_count
    name = fresh_name(set(g.names), f"{g.names[a]}-{g.names[b]}.mid")
    edges = list(g.edges)
    edges[e] = (a, fresh)
    edges.append((fresh, b))
    return GraphWithSinks(
        names=g.names + (name,),
        sinks=g.sinks + (sink_flag,),
        edges=tuple(edges),
        subdivision=g.subdivision + (True,),
        allow_bivalent=g.allow_bivalent,
        name=g.name,
    )


@dataclass(frozen=True)
class Quotient:
    """The quotient graph obtained by collapsing every edge away from one vertex.

    Attributes:
        source: The graph the quotient was taken from.
        vertex: Id of the articulation in `source` (id 0 in `graph`).
        graph: The quotient graph; every vertex except 0 is a sink.
        vertex_map: Quotient vertex id for each source vertex.
        edge_map: Quotient edge id for each source edge, None if collapsed.
    """

    source: GraphWithSinks
    vertex: int
    graph: GraphWithSinks
    vertex_map: Tuple[int, ...]
    edge_map: Tuple[Optional[int], ...]

    @property
    def sinks(self) -> FrozenSet[int]:
        return self.graph.sink_set


def articulation_quotient(g: GraphWithSinks, v: int) -> Quotient:
    """Collapse all edges not incident to v, turning the rest into sinks.

    One sink is produced per connected component of G - v and named after
    the component's smallest vertex. Loops at v were subdivided on ingest,
    so each former loop arrives here as a pair of parallel edges to its own
    single-vertex component.
    """
    if g.sink_set:
        raise InvalidGraphError("articulation quotients are taken of graphs without sinks")
    if not 0 <= v < g.vertex_count:
        raise InvalidGraphError(f"unknown vertex {v}")
    if v not in classify(g).articulations:
        raise InvalidGraphError(f"vertex {g.names[v]!r} is not an articulation")

    reduced = g.to_networkx()
    reduced.remove_node(v)
    components = sorted(
        (sorted(component) for component in nx.connected_components(reduced)),
        key=lambda component: component[0],
    )

    vertex_map = [0] * g.vertex_count
    names = [g.names[v]]
    for index, component in enumerate(components, start=1):
        names.append(g.names[component[0]])
        for member in component:
            vertex_map[member] = index

    edges: List[Tuple[int, int]] = []
    edge_map: List[Optional[int]] = []
    for a, b in g.edges:
        if v in (a, b):
            edge_map.append(len(edges))
            edges.append((vertex_map[a], vertex_map[b]))
        else:
            edge_map.append(None)

    quotient = GraphWithSinks(
        names=tuple(names),
        sinks=(False,) + (True,) * len(components),
        edges=tuple(edges),
        allow_bivalent=True,
        name=f"{g.label()}/{g.names[v]}",
    )
    logger.debug(
        "Quotient of %s at %s: %d sinks, %d edges",
        g.label(), g.names[v], len(components), len(edges),
    )
    return Quotient(
        source=g,
        vertex=v,
        graph=quotient,
        vertex_map=tuple(vertex_map),
        edge_map=tuple(edge_map),
    )
