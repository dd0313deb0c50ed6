"""
Closed-form values and bounds for the topological complexity of
configuration spaces of graphs, and the dispatch choosing which applies.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Tuple, Union

from ..errors import DomainError
from ..graphs.graph import GraphWithSinks, classify


class Special(Enum):
    """Non-numeric answers."""
    INFINITE = "infinite"
    UNKNOWN = "unknown"


OracleValue = Union[int, Special]


def oracle_tc_graph(b1: int) -> int:
    """TC of a connected graph: 0, 1 or 2 by its first Betti number."""
    if b1 < 0:
        raise DomainError(f"first Betti number must be non-negative, got {b1}")
    return min(b1, 2)


def oracle_tc_tree(n: int, v3: int, *, interval: bool = False, y_shaped: bool = False) -> int:
    """2 min(n // 2, |V_{>=3}|) for trees other than the interval and Y."""
    if n < 1:
        raise DomainError(f"particle count must be positive, got {n}")
    if interval or v3 < 1:
        raise DomainError("the tree formula excludes the interval")
    if y_shaped:
        raise DomainError("the tree formula excludes trees homeomorphic to Y")
    return 2 * min(n // 2, v3)


def oracle_tc_fully_articulated(n: int, v3: int, *, y_shaped: bool = False) -> int:
    """2 |V_{>=3}| for n >= 2 |V_{>=3}|; the Y gives 1 at n = 2 and 2 beyond."""
    if v3 < 1:
        raise DomainError("needs at least one essential vertex")
    if n < 2 * v3:
        raise DomainError(f"formula holds for n >= {2 * v3}, got n = {n}")
    if y_shaped:
        return 1 if n == 2 else 2
    return 2 * v3


def oracle_tc_banana(n: int, k: int) -> OracleValue:
    """TC of Conf_n(B_k); UNKNOWN for k = 3 and n >= 4."""
    if n < 1 or k < 1:
        raise DomainError("n and k must be positive")
    if k <= 2:
        if n > k:
            return Special.INFINITE
        return 0 if (n, k) == (1, 1) else 1
    if k >= 4 and n >= 3:
        return 4
    if n <= 2 or n == k == 3:
        return 2
    return Special.UNKNOWN


def oracle_tc_articulation_bounds(n: int, m: int, v3: int) -> Tuple[int, int]:
    """(2 min(n // 2, m), 2 min(n, |V_{>=3}|)) for n >= 4 and m >= 2 articulations."""
    if n < 4:
        raise DomainError(f"articulation bounds need n >= 4, got {n}")
    if m < 2 or v3 < m:
        raise DomainError("needs at least two essential articulations")
    return 2 * min(n // 2, m), 2 * min(n, v3)


def oracle_farber_conjecture(n: int, m: int) -> int:
    """The conjectured value 2m for n >= 2m; never reported as settled."""
    if m < 1 or n < 2 * m:
        raise DomainError("conjecture concerns n >= 2 |V_{>=3}| >= 2")
    return 2 * m


@dataclass(frozen=True)
class OraclePrediction:
    """What a closed-form result says about TC(Conf_n(G)).

    Attributes:
        source: "graph", "interval", "y", "tree", "fully-articulated",
            "banana", "articulation-bounds" or "conjecture".
        lower: Smallest value allowed (None for non-numeric answers).
        upper: Largest value allowed.
        special: INFINITE or UNKNOWN when the answer is not a number.
        settled: False for the conjecture.
    """

    source: str
    lower: Optional[int] = None
    upper: Optional[int] = None
    special: Optional[Special] = None
    settled: bool = True

    @classmethod
    def exact(cls, source: str, value: OracleValue, settled: bool = True) -> OraclePrediction:
        if isinstance(value, Special):
            return cls(source, special=value, settled=settled)
        return cls(source, value, value, settled=settled)

    @property
    def is_exact(self) -> bool:
        return self.special is None and self.lower == self.upper

    def admits(self, lower: int, upper: int) -> bool:
        """Whether the interval [lower, upper] can contain the predicted value."""
        if self.special is not None or self.lower is None or self.upper is None:
            return True
        return lower <= self.upper and self.lower <= upper

    def to_dict(self) -> Dict[str, Any]:
        return {
            "source": self.source,
            "lower": self.lower,
            "upper": self.upper,
            "special": self.special.value if self.special else None,
            "settled": self.settled,
        }


def predict(g: GraphWithSinks, n: int) -> Optional[OraclePrediction]:
    """The closed-form result that covers (g, n), if any."""
    if g.sink_set or not g.is_connected or n < 1:
        return None
    if n == 1:
        return OraclePrediction.exact("graph", oracle_tc_graph(g.first_betti))

    k = g.banana_width
    if k is not None:
        return OraclePrediction.exact("banana", oracle_tc_banana(n, k))

    v3 = len(g.essential)
    if g.is_tree:
        if g.is_interval or v3 == 0:
            return OraclePrediction.exact("interval", Special.INFINITE)
        if g.is_y_shaped:
            return OraclePrediction.exact("y", oracle_tc_fully_articulated(n, 1, y_shaped=True))
        return OraclePrediction.exact("tree", oracle_tc_tree(n, v3))

    info = classify(g)
    if info.fully_articulated and v3 >= 1 and n >= 2 * v3:
        return OraclePrediction.exact("fully-articulated", oracle_tc_fully_articulated(n, v3))
    m = len(info.articulations & info.essential)
    if m >= 2 and n >= 4:
        lower, upper = oracle_tc_articulation_bounds(n, m, v3)
        return OraclePrediction("articulation-bounds", lower, upper)
    if v3 >= 1 and n >= 2 * v3:
        return OraclePrediction.exact("conjecture", oracle_farber_conjecture(n, v3), settled=False)
    return None
