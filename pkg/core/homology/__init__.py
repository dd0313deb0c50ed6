"""Cellular homology of cube complexes over exact coefficient rings."""

from .chain_complex import (
    BettiProfile,
    ChainComplex,
    betti,
    betti_wedge_formula,
    boundary_columns,
    chain_complex,
    chain_vector,
    homology_class_is_zero,
)
from .coefficients import COEFFICIENTS, CoefficientRegistry, Coefficients
from .sparse import Elimination, SparseMatrix, invariant_factors_from_diagonal

__all__ = [
    'BettiProfile', 'ChainComplex', 'betti', 'betti_wedge_formula', 'boundary_columns',
    'chain_complex', 'chain_vector', 'homology_class_is_zero',
    'COEFFICIENTS', 'CoefficientRegistry', 'Coefficients',
    'Elimination', 'SparseMatrix', 'invariant_factors_from_diagonal',
]
