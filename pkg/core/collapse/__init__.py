"""Homotopy-preserving simplification by free-face collapses."""

from .collapse import CollapseTrace, HomotopyDimensionBound, collapse, homotopy_dimension_upper
from .policies import COLLAPSE_POLICIES, CollapsePolicy, CollapsePolicyRegistry

__all__ = [
    'CollapseTrace', 'HomotopyDimensionBound', 'collapse', 'homotopy_dimension_upper',
    'COLLAPSE_POLICIES', 'CollapsePolicy', 'CollapsePolicyRegistry',
]
