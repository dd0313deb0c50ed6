"""Topological complexity: zero-divisor search, closed-form oracles and reports."""

from .oracles import (
    OraclePrediction,
    Special,
    oracle_farber_conjecture,
    oracle_tc_articulation_bounds,
    oracle_tc_banana,
    oracle_tc_fully_articulated,
    oracle_tc_graph,
    oracle_tc_tree,
    predict,
)
from .report import TcReport, Verdict, tc_report
from .tensor import diagonal, multiply, zero_divisor
from .zcl import ZclCertificate, ZclSearch, candidate_classes, zcl_lower_bound

__all__ = [
    'OraclePrediction', 'Special', 'oracle_farber_conjecture', 'oracle_tc_articulation_bounds',
    'oracle_tc_banana', 'oracle_tc_fully_articulated', 'oracle_tc_graph', 'oracle_tc_tree',
    'predict', 'TcReport', 'Verdict', 'tc_report', 'diagonal', 'multiply', 'zero_divisor',
    'ZclCertificate', 'ZclSearch', 'candidate_classes', 'zcl_lower_bound',
]
