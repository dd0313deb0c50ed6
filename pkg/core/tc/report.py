"""
Topological complexity reports.

The lower bound is a zero-divisor cup-length certificate (or the graph
formula once the model is homotopy equivalent to a graph); the upper bound
is twice the homotopy dimension. Disconnected models have infinite TC.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional

from ..collapse.collapse import HomotopyDimensionBound
from ..errors import InvalidGraphError, ModelError
from ..events import ReportReady
from ..graphs.graph import GraphWithSinks
from ..model.complex import components
from .oracles import OraclePrediction, Special, oracle_tc_graph, predict
from .zcl import ZclCertificate, ZclSearch

logger = logging.getLogger(__name__)

SEARCH_FIELDS = ("f2", "q")


class Verdict(Enum):
    EXACT = "exact"
    INTERVAL = "interval"
    INFINITE = "infinite"


@dataclass(frozen=True)
class TcReport:
    """Certified bounds for TC(Conf_n(G)).

    Attributes:
        graph: Label of the graph.
        n: Number of particles.
        verdict: EXACT, INTERVAL or INFINITE.
        lower: Certified lower bound (None when infinite).
        upper: Upper bound (None when infinite).
        certificate_kind: "zcl-f2", "zcl-q", "graph-formula" or "disconnected".
        certificate: The zero-divisor product behind a zcl lower bound.
        searches: Search outcome per field that was searched.
        homotopy_dimension: Upper bound for the homotopy dimension.
        components: Connected components of the model.
        oracle: Closed-form prediction covering (G, n), if any.
        consistent: Whether the computed answer agrees with the oracle.
    """

    graph: str
    n: int
    verdict: Verdict
    lower: Optional[int]
    upper: Optional[int]
    certificate_kind: str
    certificate: Optional[ZclCertificate] = None
    searches: Dict[str, ZclSearch] = field(default_factory=dict)
    homotopy_dimension: Optional[HomotopyDimensionBound] = None
    components: int = 1
    oracle: Optional[OraclePrediction] = None
    consistent: Optional[bool] = None

    @property
    def budget_exhausted(self) -> bool:
        return any(search.exhausted for search in self.searches.values())


def _consistent(oracle: Optional[OraclePrediction], verdict: Verdict, lower, upper) -> Optional[bool]:
    if oracle is None:
        return None
    if oracle.special is Special.UNKNOWN:
        return True
    if verdict is Verdict.INFINITE or oracle.special is Special.INFINITE:
        return verdict is Verdict.INFINITE and oracle.special is Special.INFINITE
    if not oracle.settled:
        return oracle.admits(lower, upper)
    if verdict is Verdict.EXACT and oracle.is_exact:
        return lower == oracle.lower
    return oracle.admits(lower, upper)


def tc_report(g: GraphWithSinks, n: int, *, budget: Optional[int] = None, session=None) -> TcReport:
    """Build the model of Conf_n(g, W) and bound its topological complexity.

    Raises:
        InvalidGraphError: g is disconnected.
        ModelError: n < 1 or the model has no configurations.
    """
    if session is None:
        from ..session import Session
        session = Session()
    if not g.is_connected:
        raise InvalidGraphError(f"graph {g.label()} is disconnected; TC needs a connected graph")

    c = session.model(g, n)
    if not c.count(0):
        raise ModelError(f"Conf_{n}({g.label()}) has no configurations")

    oracle = predict(g, n)
    count = components(c)
    if count > 1:
        report = TcReport(
            g.label(), n, Verdict.INFINITE, None, None, "disconnected",
            components=count, oracle=oracle,
            consistent=_consistent(oracle, Verdict.INFINITE, None, None),
        )
        return _finish(session, report)

    trace = session.collapse(g, n)
    bound = session.homotopy_dimension(g, n)
    if trace.survivor.dimension <= 1 or bound.value <= 1:
        numbers = session.homology(g, n, "q").betti
        b1 = numbers[1] if len(numbers) > 1 else 0
        value = oracle_tc_graph(b1)
        report = TcReport(
            g.label(), n, Verdict.EXACT, value, value, "graph-formula",
            homotopy_dimension=bound, oracle=oracle,
            consistent=_consistent(oracle, Verdict.EXACT, value, value),
        )
        return _finish(session, report)

    upper = 2 * bound.value
    searches: Dict[str, ZclSearch] = {}
    best: Optional[ZclSearch] = None
    best_field = SEARCH_FIELDS[0]
    for tag in SEARCH_FIELDS:
        search = session.zcl(g, n, tag, budget)
        searches[tag] = search
        if best is None or search.length > best.length:
            best, best_field = search, tag
        if best.length >= upper:
            break

    lower = best.length
    verdict = Verdict.EXACT if lower == upper else Verdict.INTERVAL
    report = TcReport(
        g.label(), n, verdict, lower, upper, f"zcl-{best_field}",
        certificate=best.certificate, searches=searches, homotopy_dimension=bound,
        oracle=oracle, consistent=_consistent(oracle, verdict, lower, upper),
    )
    return _finish(session, report)


def _finish(session, report: TcReport) -> TcReport:
    if report.consistent is False:
        logger.warning(
            "TC of Conf_%d(%s) computed as [%s, %s] disagrees with the %s prediction",
            report.n, report.graph, report.lower, report.upper, report.oracle.source,
        )
    logger.info(
        "TC of Conf_%d(%s): %s [%s, %s] via %s",
        report.n, report.graph, report.verdict.value, report.lower, report.upper,
        report.certificate_kind,
    )
    session.event_bus.publish_payload(ReportReady(
        graph=report.graph, n=report.n, verdict=report.verdict.value,
        lower=report.lower, upper=report.upper,
    ))
    return report
