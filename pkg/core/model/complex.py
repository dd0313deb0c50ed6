"""
The cube complex modelling Conf_n(G, W).
Enumeration, face incidence and connectivity of the model.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Dict, Iterable, List, Mapping, Sequence, Set, Tuple

import networkx as nx

from ..errors import ModelError
from ..graphs.graph import GraphWithSinks
from .cells import (
    CombConfig,
    Cube,
    Location,
    allowed_moves,
    at_vertex,
    face,
    on_edge,
)

logger = logging.getLogger(__name__)

FacePair = Tuple[int, int]


@dataclass(frozen=True)
class CubeComplex:
    """Finite cube complex with canonical cell order and face incidence.

    Attributes:
        graph: Graph whose configuration space is modelled.
        n: Number of particles.
        cells: Cubes per dimension, in canonical order.
        faces: faces[d][j][i] = (index of face i@0, index of face i@1) of
            d-cube j among the (d-1)-cubes; faces[0] holds empty tuples.
    """

    graph: GraphWithSinks
    n: int
    cells: Tuple[Tuple[Cube, ...], ...]
    faces: Tuple[Tuple[Tuple[FacePair, ...], ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.cells) - 1

    @property
    def counts(self) -> Tuple[int, ...]:
        return tuple(len(level) for level in self.cells)

    def count(self, d: int) -> int:
        return len(self.cells[d]) if 0 <= d < len(self.cells) else 0

    @property
    def euler(self) -> int:
        return sum((-1) ** d * len(level) for d, level in enumerate(self.cells))

    @cached_property
    def _index(self) -> Tuple[Dict[Cube, int], ...]:
        return tuple({cube: j for j, cube in enumerate(level)} for level in self.cells)

    def index(self, cube: Cube) -> int:
        try:
            return self._index[cube.dimension][cube]
        except (IndexError, KeyError):
            raise ModelError(f"cube {cube} is not a cell of this complex") from None

    def contains(self, cube: Cube) -> bool:
        return cube.dimension < len(self.cells) and cube in self._index[cube.dimension]

    def face_index(self, d: int, j: int, resolved: Mapping[int, int]) -> int:
        """Index of the face of d-cube j with the given axes resolved to 0 or 1."""
        for axis in sorted(resolved, reverse=True):
            j = self.faces[d][j][axis][resolved[axis]]
            d -= 1
        return j

    def subcomplex(self, keep: Sequence[Iterable[int]]) -> CubeComplex:
        """Restrict to the kept cells of each dimension, which must be face-closed."""
        kept = [sorted(indices) for indices in keep]
        while kept and not kept[-1]:
            kept.pop()
        remap: List[Dict[int, int]] = [
            {old: new for new, old in enumerate(indices)} for indices in kept
        ]
        cells = []
        faces = []
        for d, indices in enumerate(kept):
            cells.append(tuple(self.cells[d][j] for j in indices))
            if d == 0:
                faces.append(tuple(() for _ in indices))
                continue
            try:
                faces.append(tuple(
                    tuple((remap[d - 1][f0], remap[d - 1][f1]) for f0, f1 in self.faces[d][j])
                    for j in indices
                ))
            except KeyError:
                raise ModelError("kept cells are not closed under taking faces") from None
        return CubeComplex(self.graph, self.n, tuple(cells), tuple(faces))

    def one_skeleton(self) -> nx.MultiGraph:
        """0-cells as nodes, 1-cells as edges keyed by their index."""
        skeleton = nx.MultiGraph()
        skeleton.add_nodes_from(range(self.count(0)))
        if self.dimension >= 1:
            for j, ((f0, f1),) in enumerate(self.faces[1]):
                skeleton.add_edge(f0, f1, key=j)
        return skeleton


def _vertex_spots(g: GraphWithSinks) -> List[int]:
    return [v for v in range(g.vertex_count) if g.sinks[v] or g.valence[v] != 1]


def enumerate_configurations(g: GraphWithSinks, n: int) -> List[CombConfig]:
    """All 0-cubes, sorted lexicographically by particle locations.

    Each particle is placed on a free non-sink vertex, a sink, or inserted at
    any position among the particles already on an edge; insertion positions
    realize every ordering on an edge exactly once.
    """
    spots = _vertex_spots(g)
    open_edges = [e for e in range(g.edge_count) if not g.touches_sink(e)]
    found: List[CombConfig] = []
    placed: List[Tuple[str, int]] = []

    def extend(particle: int, used: Set[int], rows: Dict[int, List[int]]) -> None:
        if particle > n:
            locations: List[Location] = [at_vertex(0)] * n
            for p, (kind, where) in enumerate(placed, start=1):
                if kind == "v":
                    locations[p - 1] = at_vertex(where)
            for edge, row in rows.items():
                for slot, p in enumerate(row):
                    locations[p - 1] = on_edge(edge, slot)
            found.append(CombConfig(tuple(locations)))
            return
        for vertex in spots:
            if not g.sinks[vertex] and vertex in used:
                continue
            placed.append(("v", vertex))
            extend(particle + 1, used | {vertex}, rows)
            placed.pop()
        for edge in open_edges:
            row = rows.get(edge, [])
            for position in range(len(row) + 1):
                placed.append(("e", edge))
                extend(particle + 1, used, {**rows, edge: row[:position] + [particle] + row[position:]})
                placed.pop()

    extend(1, set(), {})
    found.sort()
    return found


def cubes_at(g: GraphWithSinks, base: CombConfig) -> List[List[Cube]]:
    """Cubes of every positive dimension whose base corner is `base`."""
    options = []
    for particle in range(1, base.n + 1):
        moves = list(allowed_moves(g, base, particle))
        if moves:
            options.append(moves)
    by_dimension: List[List[Cube]] = []
    for k in range(1, len(options) + 1):
        level: List[Cube] = []
        for chosen in combinations(options, k):
            for moves in product(*chosen):
                resources = {move.resource(g) for move in moves}
                if len(resources) == k:
                    level.append(Cube(base, tuple(moves)))
        if not level:
            break
        by_dimension.append(level)
    return by_dimension


def build_model(g: GraphWithSinks, n: int) -> CubeComplex:
    """Build the full cube complex of Conf_n(g, W).

    Raises:
        ModelError: If n < 1 or a face of an enumerated cube is missing.
    """
    if n < 1:
        raise ModelError(f"particle count must be positive, got {n}")

    levels: List[List[Cube]] = [[Cube(config) for config in enumerate_configurations(g, n)]]
    for base in levels[0]:
        for k, level in enumerate(cubes_at(g, base.base), start=1):
            while len(levels) <= k:
                levels.append([])
            levels[k].extend(level)
    for level in levels:
        level.sort()
    while levels and not levels[-1]:
        levels.pop()

    index = [{cube: j for j, cube in enumerate(level)} for level in levels]
    faces: List[Tuple[Tuple[FacePair, ...], ...]] = [tuple(() for _ in levels[0])] if levels else []
    for d in range(1, len(levels)):
        rows = []
        for cube in levels[d]:
            pairs = []
            for axis in range(d):
                try:
                    pairs.append((
                        index[d - 1][face(g, cube, axis, 0)],
                        index[d - 1][face(g, cube, axis, 1)],
                    ))
                except KeyError:
                    raise ModelError(f"face of {cube} along axis {axis} is not a cell") from None
            rows.append(tuple(pairs))
        faces.append(tuple(rows))

    complex_ = CubeComplex(g, n, tuple(tuple(level) for level in levels), tuple(faces))
    logger.info(
        "Built model of Conf_%d(%s): cells %s, dimension %d",
        n, g.label(), list(complex_.counts), complex_.dimension,
    )
    return complex_


def components(c: CubeComplex) -> int:
    """Number of connected components of the complex."""
    if c.count(0) == 0:
        return 0
    return nx.number_connected_components(c.one_skeleton())


def dimension_bound(g: GraphWithSinks, n: int) -> int:
    """min{n, |V_{>=2}| + |E_W|}."""
    return min(n, len(g.hosts) + len(g.sink_edges))


def relabel_cells(cells: Iterable[Cube], permutation: Mapping[int, int]) -> List[Cube]:
    """Cells after renaming particles; a permutation maps the model onto itself."""
    return sorted(cube.relabel(permutation) for cube in cells)
