"""JSON report and console summary backend."""

from .reports import (
    dumps,
    inventory_document,
    homology_document,
    collapse_document,
    ring_document,
    tc_document,
    quotient_document,
    verify_document,
    write_document,
)
from .summary import SummaryPrinter, summarize

__all__ = [
    'dumps', 'inventory_document', 'homology_document', 'collapse_document',
    'ring_document', 'tc_document', 'quotient_document', 'verify_document',
    'write_document', 'SummaryPrinter', 'summarize',
]
