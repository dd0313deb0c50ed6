"""Acceptance checks and the suite runner behind the verify command."""

from .checks import CHECKS, CheckContext, CheckKind, CheckRegistry, Status
from .runner import CheckResult, CheckSpec, VerifyTable, load_suite, run_checks

__all__ = [
    'CHECKS', 'CheckContext', 'CheckKind', 'CheckRegistry', 'Status',
    'CheckResult', 'CheckSpec', 'VerifyTable', 'load_suite', 'run_checks',
]
