"""
Elementary free-face collapses of cube complexes.
The input complex is never mutated; all bookkeeping happens on a private
working copy of the incidence counts.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

from ..model.complex import CubeComplex, dimension_bound
from .policies import COLLAPSE_POLICIES, CollapsePolicy

logger = logging.getLogger(__name__)

CollapsePair = Tuple[int, int, int]


@dataclass(frozen=True)
class CollapseTrace:
    """Removed (free cell, coface) pairs and the surviving complex.

    Attributes:
        source_counts: Cell counts of the complex before collapsing.
        pairs: (dimension of the free cell, free cell index, coface index),
            indices taken in the source complex, in removal order.
        survivor: What is left, reindexed canonically.
        policy: Name of the policy that ordered the collapses.
        seed: Seed handed to the policy.
    """

    source_counts: Tuple[int, ...]
    pairs: Tuple[CollapsePair, ...]
    survivor: CubeComplex
    policy: str = "greedy"
    seed: int = 0

    @property
    def removed(self) -> int:
        return len(self.pairs)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "policy": self.policy,
            "seed": self.seed,
            "source_counts": list(self.source_counts),
            "survivor_counts": list(self.survivor.counts),
            "survivor_dimension": self.survivor.dimension,
            "pairs": [list(pair) for pair in self.pairs],
        }


class _Collapser:
    def __init__(self, c: CubeComplex):
        self.c = c
        self.alive: List[List[bool]] = [[True] * c.count(d) for d in range(c.dimension + 1)]
        self.cofaces: List[List[List[int]]] = [[[] for _ in range(c.count(d))] for d in range(c.dimension + 1)]
        for d in range(1, c.dimension + 1):
            for j, pairs in enumerate(c.faces[d]):
                for f0, f1 in pairs:
                    self.cofaces[d - 1][f0].append(j)
                    self.cofaces[d - 1][f1].append(j)
        self.count: List[List[int]] = [[len(up) for up in level] for level in self.cofaces]
        self.pairs: List[CollapsePair] = []

    def _free_face(self, d: int, j: int) -> Optional[int]:
        for f0, f1 in self.c.faces[d][j]:
            for tau in (f0, f1):
                if self.alive[d - 1][tau] and self.count[d - 1][tau] == 1:
                    return tau
        return None

    def _remove(self, d: int, sigma: int, tau: int) -> None:
        self.alive[d][sigma] = False
        self.alive[d - 1][tau] = False
        for f0, f1 in self.c.faces[d][sigma]:
            self.count[d - 1][f0] -= 1
            self.count[d - 1][f1] -= 1
        if d >= 2:
            for f0, f1 in self.c.faces[d - 1][tau]:
                self.count[d - 2][f0] -= 1
                self.count[d - 2][f1] -= 1
        self.pairs.append((d - 1, tau, sigma))

    def _owner(self, d: int, tau: int) -> Optional[int]:
        for sigma in self.cofaces[d - 1][tau]:
            if self.alive[d][sigma]:
                return sigma
        return None

    def stage(self, d: int, keys: List[Tuple[int, ...]]) -> int:
        """Collapse every free pair between dimensions d-1 and d."""
        before = len(self.pairs)
        heap = [(keys[j], j) for j in range(self.c.count(d)) if self.alive[d][j]]
        heapq.heapify(heap)
        while heap:
            _, sigma = heapq.heappop(heap)
            if not self.alive[d][sigma] or self.count[d][sigma]:
                continue
            tau = self._free_face(d, sigma)
            if tau is None:
                continue
            self._remove(d, sigma, tau)
            for f0, f1 in self.c.faces[d][sigma]:
                for face in (f0, f1):
                    if self.alive[d - 1][face] and self.count[d - 1][face] == 1:
                        owner = self._owner(d, face)
                        if owner is not None:
                            heapq.heappush(heap, (keys[owner], owner))
        return len(self.pairs) - before

    def survivor(self) -> CubeComplex:
        keep = [[j for j, alive in enumerate(level) if alive] for level in self.alive]
        return self.c.subcomplex(keep)


def collapse(
    c: CubeComplex,
    policy: Union[str, CollapsePolicy] = "greedy",
    seed: int = 0,
) -> CollapseTrace:
    """Remove free pairs, top dimension first, until none remain.

    Within a dimension the lowest-ranked cell with a free face is collapsed
    next; the result is deterministic for a given policy and seed.
    """
    chosen = COLLAPSE_POLICIES.get(policy) if isinstance(policy, str) else policy
    worker = _Collapser(c)
    for d in range(c.dimension, 0, -1):
        removed = worker.stage(d, chosen.rank(c, d, seed))
        logger.debug("Collapsed %d pairs of dimensions (%d, %d)", removed, d - 1, d)
    survivor = worker.survivor()
    logger.info(
        "Collapse (%s) of Conf_%d(%s): %s -> %s, %d pairs removed",
        chosen.name, c.n, c.graph.label(), list(c.counts), list(survivor.counts), len(worker.pairs),
    )
    return CollapseTrace(c.counts, tuple(worker.pairs), survivor, chosen.name, seed)


@dataclass(frozen=True)
class HomotopyDimensionBound:
    """An upper bound for the homotopy dimension and where it came from.

    Attributes:
        value: The smallest of the available bounds.
        bounds: Every available bound by name ("survivor", "tree", "cells").
        achieved: Names of the bounds equal to `value`.
    """

    value: int
    bounds: Dict[str, int] = field(default_factory=dict)
    achieved: Tuple[str, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {"value": self.value, "bounds": dict(self.bounds), "achieved": list(self.achieved)}


def homotopy_dimension_upper(
    c: CubeComplex,
    survivor: Optional[CubeComplex] = None,
) -> HomotopyDimensionBound:
    """min of the survivor dimension and the closed-form bounds that apply.

    Trees without sinks give min(n // 2, |V_{>=3}|); every graph gives
    min(n, |V_{>=2}| + |E_W|).
    """
    g = c.graph
    if survivor is None:
        survivor = collapse(c).survivor
    bounds = {"survivor": survivor.dimension, "cells": dimension_bound(g, c.n)}
    if g.is_tree and not g.sink_set:
        bounds["tree"] = min(c.n // 2, len(g.essential))
    value = min(bounds.values())
    achieved = tuple(sorted(name for name, bound in bounds.items() if bound == value))
    return HomotopyDimensionBound(value, bounds, achieved)
