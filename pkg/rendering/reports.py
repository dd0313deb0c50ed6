"""
JSON documents for every pipeline artifact.
Keys are sorted and values are plain JSON types, so identical inputs
produce byte-identical output.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from core.cohomology.ring import CohomologyRing
from core.collapse.collapse import CollapseTrace
from core.graphs.graph import GraphWithSinks, Quotient
from core.graphs.io import serialize_graph
from core.homology.chain_complex import BettiProfile
from core.homology.coefficients import COEFFICIENTS
from core.model.cells import Cube, Location, MoveKind
from core.model.chains import Chain
from core.model.complex import CubeComplex, components
from core.tc.report import TcReport
from core.tc.zcl import ZclCertificate, ZclSearch
from core.verify.checks import Status
from core.verify.runner import VerifyTable

Document = Dict[str, Any]


def _location(g: GraphWithSinks, loc: Location) -> str:
    if loc.on_vertex:
        return g.names[loc.index]
    return f"e{loc.index}.{loc.slot}"


def cube_document(g: GraphWithSinks, cube: Cube) -> Document:
    return {
        "base": [_location(g, loc) for loc in cube.base.locations],
        "moves": [
            {
                "particle": move.particle,
                "kind": "transit" if move.kind == MoveKind.SINK_EDGE_TRANSIT else "enter",
                "start": g.names[move.start],
                "edge": move.edge,
            }
            for move in cube.moves
        ],
    }


def inventory_document(c: CubeComplex, include_cells: bool = False) -> Document:
    """Cell inventory: counts per dimension, optionally every cell with its faces."""
    document: Document = {
        "graph": c.graph.label(),
        "n": c.n,
        "counts": list(c.counts),
        "dimension": c.dimension,
        "euler": c.euler,
        "components": components(c),
    }
    if include_cells:
        document["cells"] = [
            [
                dict(cube_document(c.graph, cube), faces=[list(pair) for pair in c.faces[d][j]])
                for j, cube in enumerate(level)
            ]
            for d, level in enumerate(c.cells)
        ]
    return document


def homology_document(g: GraphWithSinks, n: int, profile: BettiProfile) -> Document:
    return dict(profile.to_dict(), graph=g.label(), n=n, torsion_free=profile.torsion_free)


def collapse_document(g: GraphWithSinks, n: int, trace: CollapseTrace, include_pairs: bool = False) -> Document:
    document = trace.to_dict()
    if not include_pairs:
        document.pop("pairs")
    document.update(graph=g.label(), n=n, removed=trace.removed)
    return document


def ring_document(g: GraphWithSinks, n: int, ring: CohomologyRing) -> Document:
    """Dimensions and nonzero structure constants of the cohomology ring."""
    to_json = ring.coefficients.to_json
    products = [
        {
            "left": [p, i],
            "right": [q, j],
            "value": {str(k): to_json(v) for k, v in sorted(vector.items())},
        }
        for (p, i, q, j), vector in sorted(ring.products.items())
        if vector
    ]
    return {
        "graph": g.label(),
        "n": n,
        "field": ring.coefficients.tag,
        "dims": list(ring.dims),
        "cells": list(ring.complex.counts),
        "pairing_rank": {
            str(p): ring.pairing_rank(p) for p in range(1, ring.top) if 2 * p <= ring.top
        } if ring.dim(ring.top) == 1 else {},
        "graded_commutative": ring.is_graded_commutative(),
        "unit": ring.has_unit(),
        "products": products,
    }


def certificate_document(certificate: ZclCertificate) -> Document:
    to_json = COEFFICIENTS.get(certificate.field).to_json
    return {
        "field": certificate.field,
        "length": certificate.length,
        "factors": [
            {"degree": degree, "coordinates": {str(k): to_json(v) for k, v in coordinates}}
            for degree, coordinates in certificate.factors
        ],
        "product": [
            {"term": list(key), "value": to_json(value)} for key, value in certificate.product
        ],
    }


def search_document(search: ZclSearch) -> Document:
    return {
        "length": search.length,
        "nodes": search.nodes,
        "exhausted": search.exhausted,
        "candidates": search.candidates,
    }


def tc_document(report: TcReport) -> Document:
    """A TC report with its certificate, re-checkable without rerunning the search."""
    return {
        "graph": report.graph,
        "n": report.n,
        "verdict": report.verdict.value,
        "lower": report.lower,
        "upper": report.upper,
        "certificate_kind": report.certificate_kind,
        "certificate": certificate_document(report.certificate) if report.certificate else None,
        "searches": {tag: search_document(search) for tag, search in report.searches.items()},
        "homotopy_dimension": report.homotopy_dimension.to_dict() if report.homotopy_dimension else None,
        "components": report.components,
        "oracle": report.oracle.to_dict() if report.oracle else None,
        "consistent": report.consistent,
        "budget_exhausted": report.budget_exhausted,
    }


def chain_document(g: GraphWithSinks, chain: Chain) -> List[Document]:
    return [
        dict(cube_document(g, cube), coefficient=coefficient) for cube, coefficient in chain.terms
    ]


def quotient_document(quotient: Quotient, star: Chain, projected: Chain, nonzero: Optional[bool]) -> Document:
    return {
        "source": quotient.source.label(),
        "vertex": quotient.source.names[quotient.vertex],
        "quotient": serialize_graph(quotient.graph),
        "star_cycle": chain_document(quotient.source, star),
        "projected": chain_document(quotient.graph, projected),
        "nonzero": nonzero,
    }


def verify_document(table: VerifyTable) -> Document:
    return {
        "results": [result.to_dict() for result in table.results],
        "passed": table.count(Status.PASS),
        "failed": table.count(Status.FAIL),
        "skipped": table.count(Status.SKIP),
        "exit_code": table.exit_code,
    }


def dumps(document: Union[Document, List[Any]]) -> str:
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_document(document: Document, out: Optional[Union[str, Path]] = None) -> str:
    """Serialize a document to `out`, or to stdout when no path is given; returns the text."""
    text = dumps(document)
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")
    return text
