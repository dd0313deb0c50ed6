"""
Acceptance check kinds.
Each kind receives the run context and its parameters and returns a
(status, message) pair; exceptions are turned into failures by the runner.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple

from ..cohomology.cochains import coboundary, cup, random_cochain
from ..collapse.collapse import collapse
from ..errors import ConfTCError
from ..graphs.graph import GraphWithSinks, articulation_quotient, subdivide_edge
from ..homology.chain_complex import betti, betti_wedge_formula, chain_complex, homology_class_is_zero
from ..model.chains import project_cycle, star_cycle
from ..model.complex import build_model, components
from ..session import Session
from ..tc.report import Verdict, tc_report


class Status(Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIP = "SKIP"


Outcome = Tuple[Status, str]


@dataclass
class CheckContext:
    """Shared state of one verify run: the session and the fixture directory."""

    session: Session
    fixtures: Path
    _graphs: Dict[str, GraphWithSinks] = field(default_factory=dict)

    def graph(self, name: str) -> GraphWithSinks:
        if name not in self._graphs:
            self._graphs[name] = self.session.load_graph(self.fixtures / f"{name}.json")
        return self._graphs[name]


CheckFunction = Callable[[CheckContext, Mapping[str, Any]], Outcome]


@dataclass(frozen=True)
class CheckKind:
    name: str
    description: str
    run: CheckFunction


def _verdict(ok: bool, message: str) -> Outcome:
    return (Status.PASS if ok else Status.FAIL), message


def _model_counts(ctx: CheckContext, params: Mapping[str, Any]) -> Outcome:
    g = ctx.graph(params["graph"])
    c = ctx.session.model(g, params["n"])
    problems = []
    if "counts" in params and list(c.counts) != list(params["counts"]):
        problems.append(f"counts {list(c.counts)} != {params['counts']}")
    if "dimension" in params and c.dimension != params["dimension"]:
        problems.append(f"dimension {c.dimension} != {params['dimension']}")
    if "euler" in params and c.euler != params["euler"]:
        problems.append(f"euler {c.euler} != {params['euler']}")
    if "components" in params and components(c) != params["components"]:
        problems.append(f"components {components(c)} != {params['components']}")
    return _verdict(not problems, "; ".join(problems) or f"cells {list(c.counts)}")


def _betti(ctx: CheckContext, params: Mapping[str, Any]) -> Outcome:
    g = ctx.graph(params["graph"])
    profile = ctx.session.homology(g, params["n"], params.get("coefficients", "z"))
    problems = []
    if "betti" in params and list(profile.betti) != list(params["betti"]):
        problems.append(f"betti {list(profile.betti)} != {params['betti']}")
    if params.get("torsion_free") and not profile.torsion_free:
        problems.append(f"unexpected torsion {profile.torsion}")
    if "euler" in params and profile.euler != params["euler"]:
        problems.append(f"euler {profile.euler} != {params['euler']}")
    b0 = profile.betti[0] if profile.betti else 0
    if b0 != components(ctx.session.model(g, params["n"])):
        problems.append("b_0 differs from the component count")
    return _verdict(not problems, "; ".join(problems) or f"betti {list(profile.betti)}")


def _betti_bound(ctx: CheckContext, params: Mapping[str, Any]) -> Outcome:
    g = ctx.graph(params["graph"])
    numbers = ctx.session.homology(g, params["n"], params.get("coefficients", "q")).betti
    degree = params["degree"]
    value = numbers[degree] if degree < len(numbers) else 0
    if "equals" in params:
        return _verdict(value == params["equals"], f"b_{degree} = {value}")
    return _verdict(value >= params["at_least"], f"b_{degree} = {value} (need >= {params['at_least']})")


def _wedge_formula(ctx: CheckContext, params: Mapping[str, Any]) -> Outcome:
    g = ctx.graph(params["graph"])
    expected = betti_wedge_formula(params["n"], params["k"], params["l"])
    numbers = ctx.session.homology(g, params["n"], "z").betti
    actual = numbers[1] if len(numbers) > 1 else 0
    return _verdict(actual == expected, f"b_1 = {actual}, formula {expected}")


def _pairing(ctx: CheckContext, params: Mapping[str, Any]) -> Outcome:
    g = ctx.graph(params["graph"])
    r = ctx.session.ring(g, params["n"], params.get("field", "f2"))
    degree = params.get("degree", 1)
    rank = r.pairing_rank(degree)
    size = r.dim(degree)
    return _verdict(rank == size == r.dim(r.top - degree), f"pairing rank {rank} on H^{degree} of dimension {size}")


def _zcl(ctx: CheckContext, params: Mapping[str, Any]) -> Outcome:
    g = ctx.graph(params["graph"])
    search = ctx.session.zcl(g, params["n"], params.get("field", "q"))
    if not search.certificate.verify(ctx.session.ring(g, params["n"], params.get("field", "q"))):
        return Status.FAIL, "certificate does not re-verify"
    if search.length >= params["at_least"]:
        return Status.PASS, f"zcl >= {search.length}"
    if search.exhausted and not params.get("budget_failure", False):
        return Status.SKIP, f"budget exhausted at length {search.length}"
    return Status.FAIL, f"zcl search reached only {search.length}"


def _tc(ctx: CheckContext, params: Mapping[str, Any]) -> Outcome:
    g = ctx.graph(params["graph"])
    report = tc_report(g, params["n"], session=ctx.session)
    expected = Verdict(params["verdict"])
    value = params.get("value")
    ok = report.verdict is expected and (value is None or report.lower == report.upper == value)
    if report.consistent is False:
        ok = False
    message = f"{report.verdict.value} [{report.lower}, {report.upper}] via {report.certificate_kind}"
    if not ok and report.budget_exhausted and not params.get("budget_failure", False):
        return Status.SKIP, f"budget exhausted: {message}"
    return _verdict(ok, message)


def _collapse_dimension(ctx: CheckContext, params: Mapping[str, Any]) -> Outcome:
    g = ctx.graph(params["graph"])
    trace = ctx.session.collapse(g, params["n"], params.get("policy"))
    dimension = trace.survivor.dimension
    return _verdict(dimension == params["dimension"], f"survivor dimension {dimension}, cells {list(trace.survivor.counts)}")


def _homotopy_dimension(ctx: CheckContext, params: Mapping[str, Any]) -> Outcome:
    g = ctx.graph(params["graph"])
    bound = ctx.session.homotopy_dimension(g, params["n"])
    return _verdict(bound.value == params["value"], f"homotopy dimension <= {bound.value} via {', '.join(bound.achieved)}")


def _quotient_injective(ctx: CheckContext, params: Mapping[str, Any]) -> Outcome:
    g = ctx.graph(params["graph"])
    v = g.vertex_id(params["vertex"])
    e1, e2, e3 = g.incident_edges[v][:3]
    quotient = articulation_quotient(g, v)
    projected = project_cycle(star_cycle(g, v, e1, e2, e3), quotient)
    target = build_model(quotient.graph, 2)
    zero = homology_class_is_zero(target, projected, "q")
    return _verdict(not zero, f"projected cycle has {len(projected)} terms in {quotient.graph.label()}")


def _monotone_particles(ctx: CheckContext, params: Mapping[str, Any]) -> Outcome:
    g = ctx.graph(params["graph"])
    profiles = [ctx.session.homology(g, n, "q").betti for n in range(1, params["max_n"] + 1)]
    for n in range(1, len(profiles)):
        before, after = profiles[n - 1], profiles[n]
        for d, value in enumerate(before):
            if value > (after[d] if d < len(after) else 0):
                return Status.FAIL, f"b_{d} drops from n={n} to n={n + 1}"
    return Status.PASS, f"betti {[list(p) for p in profiles]}"


def _monotone_banana(ctx: CheckContext, params: Mapping[str, Any]) -> Outcome:
    n = params["n"]
    values = []
    for k in params["widths"]:
        numbers = ctx.session.homology(ctx.graph(f"B{k}"), n, "q").betti
        values.append(numbers[1] if len(numbers) > 1 else 0)
    ok = all(values[0] <= value for value in values[1:])
    return _verdict(ok, f"b_1 over widths {list(params['widths'])}: {values}")


def _leibniz(ctx: CheckContext, params: Mapping[str, Any]) -> Outcome:
    g = ctx.graph(params["graph"])
    c = ctx.session.model(g, params["n"])
    tag = params.get("field", "q")
    rng = random.Random(params.get("seed", 0))
    degrees = [(p, q) for p in range(c.dimension) for q in range(c.dimension - p)]
    if not degrees:
        return Status.SKIP, "complex has no room for a product rule"
    for sample in range(params.get("samples", 200)):
        p, q = degrees[sample % len(degrees)]
        u = random_cochain(c, p, tag, rng)
        v = random_cochain(c, q, tag, rng)
        left = coboundary(c, cup(c, u, v))
        du_v = cup(c, coboundary(c, u), v)
        u_dv = cup(c, u, coboundary(c, v))
        right = du_v + u_dv if p % 2 == 0 else du_v - u_dv
        if left != right:
            return Status.FAIL, f"product rule fails on sample {sample} in degrees ({p}, {q})"
    return Status.PASS, f"{params.get('samples', 200)} samples"


def _collapse_preserves_betti(ctx: CheckContext, params: Mapping[str, Any]) -> Outcome:
    g = ctx.graph(params["graph"])
    c = ctx.session.model(g, params["n"])
    original = betti(chain_complex(c, "z")).betti
    for policy in params.get("policies", ["greedy"]):
        trace = collapse(c, policy)
        after = betti(chain_complex(trace.survivor, "z")).betti
        if after != original[: len(after)] or any(original[len(after):]):
            return Status.FAIL, f"policy {policy}: {list(after)} != {list(original)}"
        if components(trace.survivor) != components(c):
            return Status.FAIL, f"policy {policy} changed the component count"
    return Status.PASS, f"betti {list(original)} kept"


def _subdivision_invariance(ctx: CheckContext, params: Mapping[str, Any]) -> Outcome:
    g = ctx.graph(params["graph"])
    finer = subdivide_edge(g, params.get("edge", 0), False)
    before = ctx.session.homology(g, params["n"], "z").betti
    after = betti(chain_complex(build_model(finer, params["n"]), "z")).betti
    return _verdict(
        after[: len(before)] == before and not any(after[len(before):]),
        f"betti {list(before)} vs subdivided {list(after)}",
    )


def _boundary_squared(ctx: CheckContext, params: Mapping[str, Any]) -> Outcome:
    g = ctx.graph(params["graph"])
    try:
        chain_complex(ctx.session.model(g, params["n"]), "z")
    except ConfTCError as exc:
        return Status.FAIL, str(exc)
    return Status.PASS, "boundary squares to zero"


class CheckRegistry:
    """Central registry of acceptance check kinds."""

    def __init__(self):
        self._kinds: Dict[str, CheckKind] = {}
        self._register_default_kinds()

    def register(self, kind: CheckKind):
        self._kinds[kind.name] = kind

    def get(self, name: str) -> Optional[CheckKind]:
        return self._kinds.get(name)

    def names(self) -> List[str]:
        return sorted(self._kinds)

    def _register_default_kinds(self):
        for name, description, run in [
            ("model_counts", "cell counts, dimension, Euler characteristic, components", _model_counts),
            ("betti", "exact Betti numbers and torsion", _betti),
            ("betti_bound", "one Betti number against a bound", _betti_bound),
            ("wedge_formula", "b_1 of a wedge of leaves and loops against the closed formula", _wedge_formula),
            ("pairing", "nondegenerate cup pairing into top cohomology", _pairing),
            ("zcl", "zero-divisor cup-length reaches a value", _zcl),
            ("tc", "topological complexity verdict and value", _tc),
            ("collapse_dimension", "dimension after free-face collapses", _collapse_dimension),
            ("homotopy_dimension", "upper bound for the homotopy dimension", _homotopy_dimension),
            ("quotient_injective", "star cycle survives in the articulation quotient", _quotient_injective),
            ("monotone_particles", "Betti numbers grow with the particle count", _monotone_particles),
            ("monotone_banana", "b_1 grows with the banana width", _monotone_banana),
            ("leibniz", "product rule for coboundary and cup", _leibniz),
            ("collapse_preserves_betti", "collapses keep the Betti numbers", _collapse_preserves_betti),
            ("subdivision_invariance", "subdividing an edge keeps the Betti numbers", _subdivision_invariance),
            ("boundary_squared", "boundary of boundary vanishes", _boundary_squared),
        ]:
            self.register(CheckKind(name, description, run))


# Global check registry instance
CHECKS = CheckRegistry()
