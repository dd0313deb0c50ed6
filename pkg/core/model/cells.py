"""
Cells of the combinatorial configuration-space model.

A 0-cube places n labeled particles on non-sink vertices, sinks or edge
slots. A k-cube is a base 0-cube (its corner with every move unresolved)
plus k moves of distinct particles. Locations and moves are tuples so that
cubes sort and hash cheaply.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Dict, Iterator, List, Mapping, NamedTuple, Tuple

from ..errors import ModelError
from ..graphs.graph import GraphWithSinks

VERTEX = 0
EDGE = 1


class Location(NamedTuple):
    """Where a particle sits: a vertex, or slot `slot` of edge `index`.

    Slots count from the edge's first endpoint.
    """

    kind: int
    index: int
    slot: int = 0

    @property
    def on_vertex(self) -> bool:
        return self.kind == VERTEX


def at_vertex(vertex: int) -> Location:
    return Location(VERTEX, vertex, 0)


def on_edge(edge: int, slot: int) -> Location:
    return Location(EDGE, edge, slot)


class MoveKind(IntEnum):
    VERTEX_TO_EDGE = 0
    SINK_EDGE_TRANSIT = 1


class Move(NamedTuple):
    """One particle leaving `start` along `edge`.

    VERTEX_TO_EDGE enters an edge between two non-sink vertices at the slot
    adjacent to `start`. SINK_EDGE_TRANSIT crosses a sink-incident edge
    and is stored from its non-sink endpoint, or from the first endpoint
    when both ends are sinks.
    """

    particle: int
    kind: MoveKind
    start: int
    edge: int

    def resource(self, g: GraphWithSinks) -> Tuple[int, int]:
        if self.kind == MoveKind.VERTEX_TO_EDGE or not g.sinks[self.start]:
            return (VERTEX, self.start)
        return (EDGE, self.edge)


@dataclass(frozen=True, order=True)
class CombConfig:
    """Locations of particles 1..n (index p - 1 holds particle p)."""

    locations: Tuple[Location, ...]

    @property
    def n(self) -> int:
        return len(self.locations)

    def location(self, particle: int) -> Location:
        return self.locations[particle - 1]

    def on_edge(self, edge: int) -> List[int]:
        """Particles in the interior of `edge`, ordered by slot."""
        found = [
            (loc.slot, particle)
            for particle, loc in enumerate(self.locations, start=1)
            if loc.kind == EDGE and loc.index == edge
        ]
        return [particle for _, particle in sorted(found)]

    def relabel(self, permutation: Mapping[int, int]) -> CombConfig:
        moved: List[Location] = list(self.locations)
        for particle, loc in enumerate(self.locations, start=1):
            moved[permutation[particle] - 1] = loc
        return CombConfig(tuple(moved))


@dataclass(frozen=True, order=True)
class Cube:
    """A base corner plus moves sorted by particle label."""

    base: CombConfig
    moves: Tuple[Move, ...] = ()

    @property
    def dimension(self) -> int:
        return len(self.moves)

    def relabel(self, permutation: Mapping[int, int]) -> Cube:
        moves = sorted(
            Move(permutation[m.particle], m.kind, m.start, m.edge) for m in self.moves
        )
        return Cube(self.base.relabel(permutation), tuple(moves))


def resolve(g: GraphWithSinks, config: CombConfig, move: Move, end: int) -> CombConfig:
    """The configuration after running `move` to `end` (0 = start, 1 = finish)."""
    if end == 0:
        return config
    locations = list(config.locations)
    index = move.particle - 1
    if move.kind == MoveKind.SINK_EDGE_TRANSIT:
        locations[index] = at_vertex(g.other_endpoint(move.edge, move.start))
        return CombConfig(tuple(locations))

    first, _ = g.edges[move.edge]
    riders = config.on_edge(move.edge)
    if move.start == first:
        for particle in riders:
            loc = locations[particle - 1]
            locations[particle - 1] = on_edge(move.edge, loc.slot + 1)
        locations[index] = on_edge(move.edge, 0)
    else:
        locations[index] = on_edge(move.edge, len(riders))
    return CombConfig(tuple(locations))


def face(g: GraphWithSinks, cube: Cube, axis: int, end: int) -> Cube:
    """Resolve move number `axis` to `end`; the remaining moves keep their order."""
    move = cube.moves[axis]
    rest = cube.moves[:axis] + cube.moves[axis + 1:]
    return Cube(resolve(g, cube.base, move, end), rest)


def corner(g: GraphWithSinks, cube: Cube, ends: Tuple[int, ...]) -> CombConfig:
    config = cube.base
    for move, end in zip(cube.moves, ends):
        config = resolve(g, config, move, end)
    return config


def allowed_moves(g: GraphWithSinks, config: CombConfig, particle: int) -> Iterator[Move]:
    """Moves available to one particle of a 0-cube, in edge-id order."""
    loc = config.location(particle)
    if loc.kind != VERTEX:
        return
    vertex = loc.index
    sink = g.sinks[vertex]
    for edge in g.incident_edges[vertex]:
        other = g.other_endpoint(edge, vertex)
        if not sink:
            kind = MoveKind.SINK_EDGE_TRANSIT if g.sinks[other] else MoveKind.VERTEX_TO_EDGE
            yield Move(particle, kind, vertex, edge)
        elif g.sinks[other] and g.edges[edge][0] == vertex:
            yield Move(particle, MoveKind.SINK_EDGE_TRANSIT, vertex, edge)


def validate_config(g: GraphWithSinks, config: CombConfig) -> None:
    """Raise ModelError unless config is a legal 0-cube of the model."""
    occupied: Dict[int, int] = {}
    slots: Dict[int, List[int]] = {}
    for particle, loc in enumerate(config.locations, start=1):
        if loc.kind == VERTEX:
            if not 0 <= loc.index < g.vertex_count:
                raise ModelError(f"particle {particle} sits on unknown vertex {loc.index}")
            if g.sinks[loc.index]:
                continue
            if g.valence[loc.index] == 1:
                raise ModelError(f"particle {particle} sits on a non-sink leaf")
            if loc.index in occupied:
                raise ModelError(
                    f"particles {occupied[loc.index]} and {particle} share vertex {loc.index}"
                )
            occupied[loc.index] = particle
        elif loc.kind == EDGE:
            if not 0 <= loc.index < g.edge_count:
                raise ModelError(f"particle {particle} sits on unknown edge {loc.index}")
            if g.touches_sink(loc.index):
                raise ModelError(f"particle {particle} is inside sink-incident edge {loc.index}")
            slots.setdefault(loc.index, []).append(loc.slot)
        else:
            raise ModelError(f"particle {particle} has an unknown location kind")
    for edge, used in slots.items():
        if sorted(used) != list(range(len(used))):
            raise ModelError(f"slots on edge {edge} are not compacted")


def validate_cube(g: GraphWithSinks, cube: Cube) -> None:
    """Raise ModelError unless cube is a legal cube of the model."""
    validate_config(g, cube.base)
    particles = [move.particle for move in cube.moves]
    if particles != sorted(set(particles)):
        raise ModelError("moves must belong to distinct particles in label order")
    resources = set()
    for move in cube.moves:
        if move not in set(allowed_moves(g, cube.base, move.particle)):
            raise ModelError(f"move {move} is not available at the base corner")
        resource = move.resource(g)
        if resource in resources:
            raise ModelError(f"two moves compete for resource {resource}")
        resources.add(resource)
