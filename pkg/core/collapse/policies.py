"""
Collapse policies.
A policy ranks the cells of one dimension; collapses are tried in rank order.
"""

import random
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from ..errors import ModelError
from ..model.cells import EDGE, Cube, MoveKind
from ..model.complex import CubeComplex

RankFunction = Callable[[CubeComplex, int, int], List[Tuple[int, ...]]]


@dataclass(frozen=True)
class CollapsePolicy:
    """Named ordering of cells for the collapse loop.

    `rank(c, d, seed)` returns one sort key per d-cell; lower keys are
    collapsed first and ties fall back to the canonical index.
    """

    name: str
    description: str
    rank: RankFunction


def _canonical(c: CubeComplex, d: int, seed: int) -> List[Tuple[int, ...]]:
    return [(j,) for j in range(c.count(d))]


def _stage(cube: Cube) -> int:
    """0 when a particle enters an edge that already holds a particle,
    1 when two particles enter the same edge, 2 otherwise."""
    entered = [m.edge for m in cube.moves if m.kind == MoveKind.VERTEX_TO_EDGE]
    held = {loc.index for loc in cube.base.locations if loc.kind == EDGE}
    if any(edge in held for edge in entered):
        return 0
    if len(set(entered)) < len(entered):
        return 1
    return 2


def _staged(c: CubeComplex, d: int, seed: int) -> List[Tuple[int, ...]]:
    return [(_stage(cube), j) for j, cube in enumerate(c.cells[d])]


def _shuffled(c: CubeComplex, d: int, seed: int) -> List[Tuple[int, ...]]:
    order = list(range(c.count(d)))
    random.Random(seed * 1009 + d).shuffle(order)
    keys: List[Tuple[int, ...]] = [()] * len(order)
    for position, j in enumerate(order):
        keys[j] = (position,)
    return keys


class CollapsePolicyRegistry:
    """Central registry of collapse policies."""

    def __init__(self):
        self._policies: Dict[str, CollapsePolicy] = {}
        self._register_default_policies()

    def register(self, policy: CollapsePolicy):
        self._policies[policy.name] = policy

    def get(self, name: str) -> CollapsePolicy:
        try:
            return self._policies[name]
        except KeyError:
            raise ModelError(
                f"unknown collapse policy {name!r}; known: {', '.join(self.names())}"
            ) from None

    def names(self) -> List[str]:
        return sorted(self._policies)

    def _register_default_policies(self):
        self.register(CollapsePolicy(
            name="greedy",
            description="canonical cell order, top dimension first",
            rank=_canonical,
        ))
        self.register(CollapsePolicy(
            name="staged",
            description="cells moving a particle onto an occupied edge first, "
                        "then cells where two particles share an edge",
            rank=_staged,
        ))
        self.register(CollapsePolicy(
            name="shuffled",
            description="seeded random order",
            rank=_shuffled,
        ))


# Global policy registry instance
COLLAPSE_POLICIES = CollapsePolicyRegistry()
