"""
Exception hierarchy for the engine.
Every failure raised by core derives from ConfTCError.
"""


class ConfTCError(Exception):
    """Base class for all engine errors."""


class GraphFormatError(ConfTCError, ValueError):
    """A graph document is malformed, repeats ids or names undeclared vertices."""


class InvalidGraphError(ConfTCError, ValueError):
    """A graph is well formed but unsuitable for the requested operation."""


class ModelError(ConfTCError, ValueError):
    """Invalid particle counts, cells, chains or violated complex axioms."""


class AlgebraError(ConfTCError, ValueError):
    """Unknown coefficients or inputs the linear algebra cannot handle."""


class DomainError(ConfTCError, ValueError):
    """Parameters outside the range where a closed-form result is known."""
