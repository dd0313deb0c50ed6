"""Cubical cochains, cup products and cohomology rings over a field."""

from .cochains import Cochain, axis_splits, coboundary, cup, cup_terms, evaluate, random_cochain
from .ring import CohomologyRing, echelon, kernel, ring

__all__ = [
    'Cochain', 'axis_splits', 'coboundary', 'cup', 'cup_terms', 'evaluate', 'random_cochain',
    'CohomologyRing', 'echelon', 'kernel', 'ring',
]
