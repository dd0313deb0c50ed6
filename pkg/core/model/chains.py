"""
Integer chains of cubes, the star cycle around an essential vertex and
the projection of 1-cycles into articulation quotients.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from ..errors import ModelError
from ..graphs.graph import GraphWithSinks, Quotient
from .cells import (
    EDGE,
    CombConfig,
    Cube,
    Location,
    Move,
    MoveKind,
    at_vertex,
    face,
    on_edge,
    resolve,
    validate_cube,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Chain:
    """A formal integer combination of cubes of one dimension."""

    graph: GraphWithSinks
    n: int
    dimension: int
    terms: Tuple[Tuple[Cube, int], ...] = ()

    @classmethod
    def from_terms(
        cls,
        graph: GraphWithSinks,
        n: int,
        dimension: int,
        terms: Iterable[Tuple[Cube, int]],
    ) -> Chain:
        totals: Dict[Cube, int] = {}
        for cube, coefficient in terms:
            if cube.dimension != dimension:
                raise ModelError(f"cube of dimension {cube.dimension} in a {dimension}-chain")
            totals[cube] = totals.get(cube, 0) + coefficient
        return cls(
            graph, n, dimension,
            tuple(sorted((cube, c) for cube, c in totals.items() if c)),
        )

    def as_dict(self) -> Dict[Cube, int]:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __neg__(self) -> Chain:
        return Chain(self.graph, self.n, self.dimension, tuple((c, -a) for c, a in self.terms))

    def __add__(self, other: Chain) -> Chain:
        if (other.graph, other.n, other.dimension) != (self.graph, self.n, self.dimension):
            raise ModelError("chains live in different groups")
        return Chain.from_terms(self.graph, self.n, self.dimension, self.terms + other.terms)

    def __sub__(self, other: Chain) -> Chain:
        return self + (-other)


def cube_boundary(g: GraphWithSinks, cube: Cube) -> List[Tuple[Cube, int]]:
    """Sum over axes i (numbered from 1) of (-1)^i (face_i@1 - face_i@0)."""
    terms = []
    for axis in range(cube.dimension):
        sign = -1 if axis % 2 == 0 else 1
        terms.append((face(g, cube, axis, 1), sign))
        terms.append((face(g, cube, axis, 0), -sign))
    return terms


def boundary(chain: Chain) -> Chain:
    if chain.dimension == 0:
        return Chain(chain.graph, chain.n, -1)
    terms = []
    for cube, coefficient in chain.terms:
        terms.extend((f, s * coefficient) for f, s in cube_boundary(chain.graph, cube))
    return Chain.from_terms(chain.graph, chain.n, chain.dimension - 1, terms)


def _arrival(g: GraphWithSinks, v: int, edge: int) -> Location:
    """Where a particle leaving v along edge ends up after one move."""
    far = g.other_endpoint(edge, v)
    return at_vertex(far) if g.sinks[far] else on_edge(edge, 0)


def _departure(g: GraphWithSinks, v: int, particle: int, edge: int) -> Move:
    far = g.other_endpoint(edge, v)
    kind = MoveKind.SINK_EDGE_TRANSIT if g.sinks[far] else MoveKind.VERTEX_TO_EDGE
    return Move(particle, kind, v, edge)


def star_cycle(
    g: GraphWithSinks,
    v: int,
    e1: int,
    e2: int,
    e3: int,
    p: int = 1,
    q: int = 2,
    n: int = 2,
    parking: Optional[Mapping[int, Location]] = None,
) -> Chain:
    """The 12-edge cycle in which p and q take turns among three edges at v.

    The two particles visit (e1, e2), (e3, e2), (e3, e1), (e2, e1), (e2, e3),
    (e1, e3) and return; each step sends one particle back to v and out
    along its next edge. The other n - 2 particles stay where `parking` puts
    them.

    Raises:
        ModelError: Bad labels, edges not at v, or parked particles that
            collide with the star.
    """
    star = (e1, e2, e3)
    if g.sinks[v] or g.valence[v] < 3:
        raise ModelError(f"vertex {v} is not an essential vertex")
    if len(set(star)) != 3 or any(e not in g.incident_edges[v] for e in star):
        raise ModelError("star edges must be three distinct edges incident to v")
    if p == q or not (1 <= p <= n and 1 <= q <= n):
        raise ModelError("p and q must be distinct particle labels in 1..n")

    parking = dict(parking or {})
    expected = set(range(1, n + 1)) - {p, q}
    if set(parking) != expected:
        raise ModelError(f"parking must place exactly the particles {sorted(expected)}")
    for particle, loc in parking.items():
        if loc.kind != EDGE and loc.index == v:
            raise ModelError(f"parked particle {particle} sits on v")
        if loc.kind == EDGE and loc.index in star:
            raise ModelError(f"parked particle {particle} sits inside a star edge")

    def one_cube(mover: int, target: int, other: int, held: int) -> Cube:
        locations: List[Location] = [at_vertex(v)] * n
        for particle, loc in parking.items():
            locations[particle - 1] = loc
        locations[other - 1] = _arrival(g, v, held)
        cube = Cube(CombConfig(tuple(locations)), (_departure(g, v, mover, target),))
        validate_cube(g, cube)
        return cube

    states = [(e1, e2), (e3, e2), (e3, e1), (e2, e1), (e2, e3), (e1, e3)]
    terms = []
    for (p_from, q_from), (p_to, q_to) in zip(states, states[1:] + states[:1]):
        if p_from != p_to:
            terms.append((one_cube(p, p_from, q, q_from), 1))
            terms.append((one_cube(p, p_to, q, q_from), -1))
        else:
            terms.append((one_cube(q, q_from, p, p_from), 1))
            terms.append((one_cube(q, q_to, p, p_from), -1))

    cycle = Chain.from_terms(g, n, 1, terms)
    if not boundary(cycle).is_zero:
        raise ModelError("star cycle failed to close")
    return cycle


def _project_location(quotient: Quotient, loc: Location) -> Location:
    if loc.kind != EDGE:
        return at_vertex(quotient.vertex_map[loc.index])
    image = quotient.edge_map[loc.index]
    source = quotient.source
    if image is None:
        a, _ = source.edges[loc.index]
        return at_vertex(quotient.vertex_map[a])
    a, b = quotient.graph.edges[image]
    return at_vertex(a if quotient.graph.sinks[a] else b)


def project_config(quotient: Quotient, config: CombConfig) -> CombConfig:
    return CombConfig(tuple(_project_location(quotient, loc) for loc in config.locations))


def project_cycle(z: Chain, quotient: Quotient) -> Chain:
    """Push a 1-cycle of Conf_n(G) into the model of Conf_n of the quotient.

    Each 1-cube is mapped corner by corner; particles inside surviving edges
    round to the edge's sink end, and 1-cubes whose corners coincide are
    dropped.
    """
    if z.graph != quotient.source:
        raise ModelError("cycle and quotient come from different graphs")
    if z.dimension != 1:
        raise ModelError("only 1-cycles can be projected")
    if not boundary(z).is_zero:
        raise ModelError("chain to project is not a cycle")

    target = quotient.graph
    terms = []
    for cube, coefficient in z.terms:
        (move,) = cube.moves
        start = project_config(quotient, cube.base)
        end = project_config(quotient, resolve(z.graph, cube.base, move, 1))
        if start == end:
            continue
        edge = quotient.edge_map[move.edge]
        if edge is None:
            raise ModelError(f"non-degenerate image along collapsed edge {move.edge}")
        a, b = target.edges[edge]
        anchor = b if target.sinks[a] and not target.sinks[b] else a
        if start.location(move.particle) == at_vertex(anchor):
            base, sign, finish = start, 1, end
        elif end.location(move.particle) == at_vertex(anchor):
            base, sign, finish = end, -1, start
        else:
            raise ModelError(f"cannot place image of {cube} in the quotient model")
        kind = (
            MoveKind.SINK_EDGE_TRANSIT
            if target.touches_sink(edge)
            else MoveKind.VERTEX_TO_EDGE
        )
        image = Cube(base, (Move(move.particle, kind, anchor, edge),))
        validate_cube(target, image)
        if resolve(target, base, image.moves[0], 1) != finish:
            raise ModelError(f"image of {cube} does not match its corners")
        terms.append((image, sign * coefficient))

    projected = Chain.from_terms(target, z.n, 1, terms)
    if not boundary(projected).is_zero:
        raise ModelError("projected chain is not a cycle")
    logger.debug(
        "Projected %d-term cycle to %d terms in %s", len(z), len(projected), target.label()
    )
    return projected
