"""
Zero-divisor cup-length search.

Candidates are x ⊗ 1 - 1 ⊗ x for degree-1 basis classes (most active
first), sums of two basis classes of equal degree, and degree-2 basis
classes. A depth-first search multiplies candidates with nondecreasing
indices and keeps the longest nonzero product it meets; every result is a
certified lower bound, maximal or not.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, List, Tuple

from ..cohomology.ring import CohomologyRing
from .tensor import Tensor, diagonal, multiply, unit, zero_divisor

logger = logging.getLogger(__name__)

Factor = Tuple[int, Tuple[Tuple[int, Any], ...]]


@dataclass(frozen=True)
class ZclCertificate:
    """A nonzero product of zero-divisors.

    Attributes:
        field: Tag of the coefficient field.
        factors: (degree, coordinates of x) per factor x ⊗ 1 - 1 ⊗ x.
        product: The product in H^* ⊗ H^*, keyed by (p, i, q, j).
    """

    field: str
    factors: Tuple[Factor, ...]
    product: Tuple[Tuple[Tuple[int, int, int, int], Any], ...]

    @property
    def length(self) -> int:
        return len(self.factors)

    def verify(self, ring: CohomologyRing) -> bool:
        """Re-multiply the factors and compare with the stated product."""
        if ring.coefficients.tag != self.field:
            return False
        total = unit(ring)
        for degree, coordinates in self.factors:
            element = zero_divisor(degree, dict(coordinates))
            if not element or diagonal(ring, element):
                return False
            total = multiply(ring, total, element)
        return bool(total) and total == dict(self.product)


@dataclass(frozen=True)
class ZclSearch:
    """Outcome of one search: the best certificate and the work spent."""

    length: int
    certificate: ZclCertificate
    nodes: int
    exhausted: bool
    candidates: int


def _activity(ring: CohomologyRing, degree: int, i: int) -> int:
    return sum(
        1 for (p, a, q, b) in ring.products
        if p and q and ((p == degree and a == i) or (q == degree and b == i))
    )


def candidate_classes(ring: CohomologyRing, max_candidates: int = 2000) -> List[Tuple[int, Dict[int, Any]]]:
    """Classes whose zero-divisors the search multiplies, in search order."""
    one = ring.coefficients.domain.one
    firsts = sorted(range(ring.dim(1)), key=lambda i: (-_activity(ring, 1, i), i))
    classes: List[Tuple[int, Dict[int, Any]]] = [(1, {i: one}) for i in firsts]
    for a, b in combinations(firsts, 2):
        classes.append((1, {a: one, b: one}))
    for i in range(ring.dim(2)):
        classes.append((2, {i: one}))
    for a, b in combinations(range(ring.dim(2)), 2):
        classes.append((2, {a: one, b: one}))
    return classes[:max_candidates]


class _Search:
    def __init__(self, ring: CohomologyRing, classes, budget: int, max_depth: int):
        self.ring = ring
        self.classes = classes
        self.elements = [zero_divisor(d, x) for d, x in classes]
        self.budget = budget
        self.limit = min(max_depth, 2 * ring.top)
        self.min_degree = min((d for d, _ in classes), default=1)
        self.nodes = 0
        self.exhausted = False
        self.best: List[int] = []
        self.best_product: Tensor = unit(ring)

    def run(self) -> None:
        self._extend([], unit(self.ring), 0, 0)

    def _done(self) -> bool:
        return self.exhausted or len(self.best) >= self.limit

    def _extend(self, chosen: List[int], product: Tensor, total: int, start: int) -> None:
        for index in range(start, len(self.elements)):
            if self._done():
                return
            degree = self.classes[index][0]
            room = (2 * self.ring.top - total - degree) // self.min_degree
            if len(chosen) + 1 + room <= len(self.best):
                continue
            if self.nodes >= self.budget:
                self.exhausted = True
                return
            self.nodes += 1
            step = multiply(self.ring, product, self.elements[index])
            if not step:
                continue
            chosen.append(index)
            if len(chosen) > len(self.best):
                self.best, self.best_product = list(chosen), step
            if len(chosen) < self.limit:
                self._extend(chosen, step, total + degree, index)
            chosen.pop()


def zcl_lower_bound(
    ring: CohomologyRing,
    budget: int = 100000,
    max_candidates: int = 2000,
    max_depth: int = 4,
) -> ZclSearch:
    """Longest nonzero product of zero-divisors found within the budget.

    `budget` counts tensor multiplications. The returned length never
    exceeds the true zero-divisor cup-length.
    """
    classes = candidate_classes(ring, max_candidates)
    search = _Search(ring, classes, budget, max_depth)
    search.run()
    if search.exhausted:
        logger.warning(
            "Zero-divisor search over %s stopped after %d multiplications at length %d",
            ring.coefficients.tag, search.nodes, len(search.best),
        )
    factors = tuple(
        (classes[index][0], tuple(sorted(classes[index][1].items()))) for index in search.best
    )
    certificate = ZclCertificate(
        ring.coefficients.tag, factors, tuple(sorted(search.best_product.items()))
    )
    logger.info(
        "zcl over %s >= %d (%d candidates, %d multiplications)",
        ring.coefficients.tag, certificate.length, len(classes), search.nodes,
    )
    return ZclSearch(certificate.length, certificate, search.nodes, search.exhausted, len(classes))
