"""
Analysis session.
Framework-agnostic orchestration of the pipeline: graph, model, collapse,
homology, cohomology ring and zero-divisor search, with results cached per
(graph, n) and milestones published on the event bus.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

from .cohomology.ring import CohomologyRing, ring
from .collapse.collapse import (
    CollapseTrace,
    HomotopyDimensionBound,
    collapse,
    homotopy_dimension_upper,
)
from .events import (
    EVENT_BUS,
    ComplexCollapsed,
    EventBus,
    GraphLoaded,
    HomologyComputed,
    ModelBuilt,
    RingComputed,
    SearchBudgetExhausted,
    SearchFinished,
)
from .graphs.graph import GraphWithSinks
from .graphs.io import load_graph
from .homology.chain_complex import BettiProfile, betti, chain_complex
from .model.complex import CubeComplex, build_model, components
from .settings import DEFAULT_SETTINGS, EngineSettings
from .tc.zcl import ZclSearch, zcl_lower_bound

logger = logging.getLogger(__name__)

Key = Tuple[GraphWithSinks, int]


class Session:
    """
    Central analysis state that coordinates the pipeline stages.
    Framework-agnostic - contains no output formatting.
    """

    def __init__(self, settings: Optional[EngineSettings] = None, event_bus: Optional[EventBus] = None):
        self.settings = settings or DEFAULT_SETTINGS
        self.event_bus = event_bus or EVENT_BUS

        self._models: Dict[Key, CubeComplex] = {}
        self._collapses: Dict[Tuple[GraphWithSinks, int, str, int], CollapseTrace] = {}
        self._homology: Dict[Tuple[GraphWithSinks, int, str], BettiProfile] = {}
        self._rings: Dict[Tuple[GraphWithSinks, int, str], CohomologyRing] = {}
        self._searches: Dict[Tuple[GraphWithSinks, int, str, int], ZclSearch] = {}

    def load_graph(self, path: Union[str, Path]) -> GraphWithSinks:
        g = load_graph(path)
        self.event_bus.publish_payload(GraphLoaded(
            graph=g.label(), vertices=g.vertex_count, edges=g.edge_count, sinks=len(g.sink_set),
        ))
        return g

    def model(self, g: GraphWithSinks, n: int) -> CubeComplex:
        key = (g, n)
        if key not in self._models:
            c = build_model(g, n)
            self._models[key] = c
            self.event_bus.publish_payload(ModelBuilt(
                graph=g.label(), n=n, counts=list(c.counts), dimension=c.dimension,
                components=components(c),
            ))
        return self._models[key]

    def collapse(
        self,
        g: GraphWithSinks,
        n: int,
        policy: Optional[str] = None,
        seed: Optional[int] = None,
    ) -> CollapseTrace:
        policy = policy or self.settings.collapse_policy
        seed = self.settings.policy_seed if seed is None else seed
        key = (g, n, policy, seed)
        if key not in self._collapses:
            trace = collapse(self.model(g, n), policy, seed)
            self._collapses[key] = trace
            self.event_bus.publish_payload(ComplexCollapsed(
                graph=g.label(), n=n, policy=policy, removed=trace.removed,
                counts=list(trace.survivor.counts), dimension=trace.survivor.dimension,
            ))
        return self._collapses[key]

    def homotopy_dimension(self, g: GraphWithSinks, n: int) -> HomotopyDimensionBound:
        return homotopy_dimension_upper(self.model(g, n), self.collapse(g, n).survivor)

    def homology(self, g: GraphWithSinks, n: int, coefficients: str = "z") -> BettiProfile:
        """Betti numbers of the model, collapsing first above the SNF threshold."""
        key = (g, n, coefficients)
        if key not in self._homology:
            c = self.model(g, n)
            target = c
            if max(c.counts, default=0) > self.settings.snf_threshold:
                logger.info(
                    "Model has %d cells in one dimension; computing homology after collapse",
                    max(c.counts),
                )
                target = self.collapse(g, n).survivor
            profile = betti(chain_complex(target, coefficients))
            if target is not c:
                profile = BettiProfile(profile.coefficients, profile.betti, profile.torsion, c.euler)
            self._homology[key] = profile
            self.event_bus.publish_payload(HomologyComputed(
                graph=g.label(), n=n, coefficients=coefficients, betti=list(profile.betti),
            ))
        return self._homology[key]

    def ring(self, g: GraphWithSinks, n: int, field: Optional[str] = None) -> CohomologyRing:
        """Cohomology ring of the collapsed model."""
        field = field or self.settings.field
        key = (g, n, field)
        if key not in self._rings:
            result = ring(self.collapse(g, n).survivor, field)
            self._rings[key] = result
            self.event_bus.publish_payload(RingComputed(
                graph=g.label(), n=n, field=field, dims=list(result.dims),
            ))
        return self._rings[key]

    def zcl(self, g: GraphWithSinks, n: int, field: str, budget: Optional[int] = None) -> ZclSearch:
        budget = self.settings.search_budget if budget is None else budget
        key = (g, n, field, budget)
        if key not in self._searches:
            search = zcl_lower_bound(
                self.ring(g, n, field),
                budget=budget,
                max_candidates=self.settings.max_candidates,
                max_depth=self.settings.max_depth,
            )
            self._searches[key] = search
            self.event_bus.publish_payload(SearchFinished(
                graph=g.label(), n=n, field=field, length=search.length, nodes=search.nodes,
            ))
            if search.exhausted:
                self.event_bus.publish_payload(SearchBudgetExhausted(
                    graph=g.label(), n=n, field=field, budget=budget, length=search.length,
                ))
        return self._searches[key]

    def clear(self):
        """Drop every cached result."""
        for cache in (self._models, self._collapses, self._homology, self._rings, self._searches):
            cache.clear()
