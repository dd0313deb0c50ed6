"""
ConfTC - command-line entry point.
Integrates the core engine with the JSON report backend.
"""

import argparse
import dataclasses
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

# Add core and rendering to path
sys.path.insert(0, str(Path(__file__).parent))

from core import ConfTCError, EngineSettings, Session
from core.errors import InvalidGraphError
from core.graphs.graph import articulation_quotient
from core.homology.chain_complex import homology_class_is_zero
from core.model.chains import project_cycle, star_cycle
from core.model.complex import build_model
from core.tc.report import tc_report
from core.verify import load_suite, run_checks
from rendering import (
    SummaryPrinter,
    collapse_document,
    homology_document,
    inventory_document,
    quotient_document,
    ring_document,
    tc_document,
    verify_document,
    write_document,
)

logger = logging.getLogger("conftc")

DATA_DIR = Path(__file__).parent / "data"
FIELDS = ("f2", "q")


def _graph(session: Session, args: argparse.Namespace):
    if not args.graph:
        raise ConfTCError(f"{args.command} needs --graph")
    return session.load_graph(args.graph)


def cmd_model(session: Session, args: argparse.Namespace) -> int:
    g = _graph(session, args)
    write_document(inventory_document(session.model(g, args.n), include_cells=args.cells), args.out)
    return 0


def cmd_homology(session: Session, args: argparse.Namespace) -> int:
    g = _graph(session, args)
    if not g.is_connected:
        logger.warning("Graph %s is disconnected; computing homology anyway", g.label())
    profile = session.homology(g, args.n, args.coefficients)
    write_document(homology_document(g, args.n, profile), args.out)
    return 0


def cmd_ring(session: Session, args: argparse.Namespace) -> int:
    g = _graph(session, args)
    result = session.ring(g, args.n, args.field)
    write_document(ring_document(g, args.n, result), args.out)
    return 0


def cmd_tc(session: Session, args: argparse.Namespace) -> int:
    g = _graph(session, args)
    report = tc_report(g, args.n, budget=args.budget, session=session)
    write_document(tc_document(report), args.out)
    return 0


def cmd_collapse(session: Session, args: argparse.Namespace) -> int:
    g = _graph(session, args)
    trace = session.collapse(g, args.n, args.policy)
    write_document(collapse_document(g, args.n, trace, include_pairs=args.cells), args.out)
    return 0


def cmd_quotient(session: Session, args: argparse.Namespace) -> int:
    g = _graph(session, args)
    if not args.vertex:
        raise ConfTCError("quotient needs --vertex")
    v = g.vertex_id(args.vertex)
    edges = args.edges or list(g.incident_edges[v][:3])
    if len(edges) != 3:
        raise InvalidGraphError(f"the star cycle needs three edges at {args.vertex!r}, got {len(edges)}")
    quotient = articulation_quotient(g, v)
    star = star_cycle(g, v, *edges)
    projected = project_cycle(star, quotient)
    nonzero = not homology_class_is_zero(build_model(quotient.graph, star.n), projected, "q")
    write_document(quotient_document(quotient, star, projected, nonzero), args.out)
    return 0


def cmd_verify(session: Session, args: argparse.Namespace) -> int:
    suite = load_suite(args.suite or DATA_DIR / "acceptance.json")
    table = run_checks(
        suite, session, args.fixtures or DATA_DIR / "graphs",
        only=args.only, include_slow=not args.fast,
    )
    write_document(verify_document(table), args.out)
    return table.exit_code


COMMANDS: Dict[str, Callable[[Session, argparse.Namespace], int]] = {
    'model': cmd_model,
    'homology': cmd_homology,
    'ring': cmd_ring,
    'tc': cmd_tc,
    'collapse': cmd_collapse,
    'quotient': cmd_quotient,
    'verify': cmd_verify,
}


def _edge_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated edge ids, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conftc",
        description="Exact homology, cohomology rings and TC bounds for graph configuration spaces with sinks.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--graph", type=Path, help="graph document (JSON)")
    parser.add_argument("-n", type=int, default=2, help="number of particles (default 2)")
    parser.add_argument("--field", choices=FIELDS, help="coefficient field of the ring command")
    parser.add_argument("--coefficients", default="z", help="coefficient tag for homology (default z)")
    parser.add_argument("--policy", help="collapse policy")
    parser.add_argument("--budget", type=int, help="products allowed per zero-divisor search")
    parser.add_argument("--out", type=Path, help="write the JSON document here instead of stdout")
    parser.add_argument("--settings", type=Path, help="engine settings file (JSON)")
    parser.add_argument("--vertex", help="articulation vertex for the quotient command")
    parser.add_argument("--edges", type=_edge_list, help="three edge ids at --vertex for the star cycle")
    parser.add_argument("--cells", action="store_true", help="include every cell, or every collapsed pair")
    parser.add_argument("--suite", type=Path, help="check suite for verify")
    parser.add_argument("--fixtures", type=Path, help="graph fixture directory for verify")
    parser.add_argument("--only", action="append", help="run only this check name or kind (repeatable)")
    parser.add_argument("--fast", action="store_true", help="skip checks marked slow")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="count", default=0)
    verbosity.add_argument("-q", "--quiet", action="store_true")
    return parser


def load_settings(args: argparse.Namespace) -> EngineSettings:
    """Settings file first, then explicit flags on top."""
    settings = EngineSettings.load_from_file(args.settings) if args.settings else EngineSettings()
    overrides = {}
    if args.policy:
        overrides['collapse_policy'] = args.policy
    if args.budget is not None:
        overrides['search_budget'] = args.budget
    if args.field:
        overrides['field'] = args.field
    return dataclasses.replace(settings, **overrides)


def configure_logging(args: argparse.Namespace, settings: EngineSettings):
    if args.quiet:
        level = logging.ERROR
    elif args.verbose:
        level = logging.DEBUG if args.verbose > 1 else logging.INFO
    else:
        level = getattr(logging, settings.log_level.upper(), logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    settings = load_settings(args)
    configure_logging(args, settings)
    if args.n < 1:
        parser.error("-n must be at least 1")

    session = Session(settings)
    printer = SummaryPrinter()
    if not args.quiet:
        printer.attach(session.event_bus)
    try:
        return COMMANDS[args.command](session, args)
    except ConfTCError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        printer.detach(session.event_bus)


if __name__ == "__main__":
    sys.exit(main())
