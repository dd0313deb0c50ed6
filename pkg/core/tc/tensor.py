"""
The Künneth model H^*(X) ⊗ H^*(X) of H^*(X x X).

An element is a dict {(p, i, q, j): coefficient} standing for the sum of
coefficient * e^p_i ⊗ e^q_j over basis classes of the ring.
"""

from typing import Any, Dict, Tuple

from ..cohomology.ring import CohomologyRing

TensorKey = Tuple[int, int, int, int]
Tensor = Dict[TensorKey, Any]


def unit(ring: CohomologyRing) -> Tensor:
    return {(0, 0, 0, 0): ring.coefficients.domain.one}


def zero_divisor(degree: int, coordinates: Dict[int, Any]) -> Tensor:
    """x ⊗ 1 - 1 ⊗ x for the class x with the given coordinates."""
    if degree == 0:
        return {}
    element: Tensor = {}
    for i, value in coordinates.items():
        if value:
            element[(degree, i, 0, 0)] = value
            element[(0, 0, degree, i)] = -value
    return element


def multiply(ring: CohomologyRing, left: Tensor, right: Tensor) -> Tensor:
    """(a ⊗ b)(c ⊗ d) = (-1)^{|b||c|} ac ⊗ bd."""
    zero = ring.coefficients.domain.zero
    top = ring.top
    result: Tensor = {}
    for (p, i, q, j), a in left.items():
        for (r, k, s, l), b in right.items():
            if p + r > top or q + s > top:
                continue
            front = ring.basis_product(p, i, r, k)
            if not front:
                continue
            back = ring.basis_product(q, j, s, l)
            if not back:
                continue
            weight = a * b if (q * r) % 2 == 0 else -(a * b)
            for m, x in front.items():
                for n, y in back.items():
                    key = (p + r, m, q + s, n)
                    result[key] = result.get(key, zero) + weight * x * y
    return {key: value for key, value in result.items() if value}


def diagonal(ring: CohomologyRing, element: Tensor) -> Dict[Tuple[int, int], Any]:
    """Image under the cup-product map a ⊗ b -> ab, keyed by (degree, index)."""
    zero = ring.coefficients.domain.zero
    result: Dict[Tuple[int, int], Any] = {}
    for (p, i, q, j), a in element.items():
        for k, value in ring.basis_product(p, i, q, j).items():
            key = (p + q, k)
            result[key] = result.get(key, zero) + a * value
    return {key: value for key, value in result.items() if value}


def degree(element: Tensor) -> int:
    """Total degree of a homogeneous element (0 for the zero element)."""
    return max((p + q for p, _, q, _ in element), default=0)
