"""
Acceptance suite runner.
Loads a suite document, runs each check in isolation and summarizes the
outcome as a table with an exit code.
"""

from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

from ..errors import ConfTCError
from ..events import CheckFinished
from ..session import Session
from .checks import CHECKS, CheckContext, CheckRegistry, Status

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckSpec:
    """One entry of a suite document."""

    name: str
    kind: str
    params: Dict[str, Any] = field(default_factory=dict)
    slow: bool = False


@dataclass(frozen=True)
class CheckResult:
    name: str
    kind: str
    status: Status
    message: str
    seconds: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'kind': self.kind,
            'status': self.status.value,
            'message': self.message,
        }


@dataclass(frozen=True)
class VerifyTable:
    results: Sequence[CheckResult]

    def count(self, status: Status) -> int:
        return sum(1 for result in self.results if result.status is status)

    @property
    def exit_code(self) -> int:
        """0 when everything passed, 1 on any failure, 2 when only skips remain."""
        if self.count(Status.FAIL):
            return 1
        if self.count(Status.SKIP):
            return 2
        return 0


def load_suite(path: Union[str, Path]) -> List[CheckSpec]:
    """Read a suite document: {"checks": [{"name", "kind", "params", "slow"}, ...]}."""
    try:
        with open(path, 'r', encoding='utf-8') as f:
            document = json.load(f)
    except (OSError, ValueError) as exc:
        raise ConfTCError(f"cannot read check suite {path}: {exc}") from exc
    entries = document.get("checks") if isinstance(document, dict) else None
    if not isinstance(entries, list):
        raise ConfTCError(f"check suite {path} has no 'checks' list")
    suite = []
    for entry in entries:
        try:
            suite.append(CheckSpec(
                entry["name"], entry["kind"], dict(entry.get("params", {})), bool(entry.get("slow", False)),
            ))
        except (KeyError, TypeError) as exc:
            raise ConfTCError(f"malformed check entry {entry!r} in {path}") from exc
    return suite


def run_checks(
    suite: Iterable[CheckSpec],
    session: Session,
    fixtures: Union[str, Path],
    *,
    only: Optional[Sequence[str]] = None,
    include_slow: bool = True,
    registry: CheckRegistry = CHECKS,
) -> VerifyTable:
    """Run the suite; a check that raises is reported as FAIL and the run goes on."""
    context = CheckContext(session, Path(fixtures))
    results = []
    for spec in suite:
        if only and spec.name not in only and spec.kind not in only:
            continue
        if spec.slow and not include_slow:
            results.append(CheckResult(spec.name, spec.kind, Status.SKIP, "slow check not requested"))
            continue
        started = time.perf_counter()
        kind = registry.get(spec.kind)
        if kind is None:
            status, message = Status.FAIL, f"unknown check kind '{spec.kind}'"
        else:
            try:
                status, message = kind.run(context, spec.params)
            except Exception as exc:
                logger.exception("Check %s raised", spec.name)
                status, message = Status.FAIL, f"{spec.name} raised {type(exc).__name__}: {exc}"
        result = CheckResult(spec.name, spec.kind, status, message, time.perf_counter() - started)
        logger.info("%s %s: %s", result.status.value, spec.name, message)
        session.event_bus.publish_payload(CheckFinished(spec.name, spec.kind, status.value))
        results.append(result)
    return VerifyTable(tuple(results))
