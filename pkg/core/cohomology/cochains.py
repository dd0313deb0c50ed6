"""
Cubical cochains, their coboundary and the cup product.

The cup product of a p-cochain u and a q-cochain v on a (p+q)-cube sums,
over every way of splitting the axes into a p-set A and its complement B,
the product of u on the front face (B resolved to 0) and v on the back
face (A resolved to 1), signed by the shuffle that sorts (A, B).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Any, Dict, Iterator, List, Tuple, Union

from ..errors import AlgebraError
from ..homology.coefficients import COEFFICIENTS, Coefficients
from ..model.complex import CubeComplex

Split = Tuple[Tuple[int, ...], Tuple[int, ...], int]


@dataclass(frozen=True)
class Cochain:
    """A sparse d-cochain: values on d-cells by index, zeros omitted."""

    coefficients: Coefficients
    degree: int
    values: Tuple[Tuple[int, Any], ...] = ()

    @classmethod
    def from_dict(cls, coefficients: Coefficients, degree: int, values: Dict[int, Any]) -> Cochain:
        converted = {}
        for j, value in values.items():
            element = value if not isinstance(value, int) else coefficients.convert(value)
            if element:
                converted[j] = element
        return cls(coefficients, degree, tuple(sorted(converted.items())))

    def as_dict(self) -> Dict[int, Any]:
        return dict(self.values)

    def __call__(self, j: int) -> Any:
        return self.as_dict().get(j, self.coefficients.domain.zero)

    @property
    def is_zero(self) -> bool:
        return not self.values

    def _check(self, other: Cochain) -> None:
        if other.degree != self.degree or other.coefficients != self.coefficients:
            raise AlgebraError("cochains of different degree or coefficients")

    def __add__(self, other: Cochain) -> Cochain:
        self._check(other)
        total = self.as_dict()
        for j, value in other.values:
            total[j] = total.get(j, self.coefficients.domain.zero) + value
        return Cochain.from_dict(self.coefficients, self.degree, total)

    def __neg__(self) -> Cochain:
        return Cochain(self.coefficients, self.degree, tuple((j, -v) for j, v in self.values))

    def __sub__(self, other: Cochain) -> Cochain:
        return self + (-other)

    def scale(self, factor: Any) -> Cochain:
        factor = self.coefficients.convert(factor) if isinstance(factor, int) else factor
        return Cochain.from_dict(
            self.coefficients, self.degree, {j: factor * v for j, v in self.values}
        )


def _ring(coefficients: Union[str, Coefficients]) -> Coefficients:
    return COEFFICIENTS.get(coefficients) if isinstance(coefficients, str) else coefficients


def coboundary(c: CubeComplex, u: Cochain) -> Cochain:
    """(du)(sigma) = u(boundary of sigma)."""
    d = u.degree + 1
    if d > c.dimension:
        return Cochain(u.coefficients, d)
    values = u.as_dict()
    zero = u.coefficients.domain.zero
    result = {}
    for j, pairs in enumerate(c.faces[d]):
        total = zero
        for axis, (f0, f1) in enumerate(pairs):
            delta = values.get(f1, zero) - values.get(f0, zero)
            total = total - delta if axis % 2 == 0 else total + delta
        if total:
            result[j] = total
    return Cochain.from_dict(u.coefficients, d, result)


@lru_cache(maxsize=None)
def axis_splits(p: int, q: int) -> Tuple[Split, ...]:
    """(A, B, sign) for every p-subset A of range(p+q), B its complement."""
    splits = []
    for front in combinations(range(p + q), p):
        back = tuple(axis for axis in range(p + q) if axis not in front)
        inversions = sum(1 for a in front for b in back if a > b)
        splits.append((front, back, -1 if inversions % 2 else 1))
    return tuple(splits)


def cup_terms(c: CubeComplex, p: int, q: int, j: int) -> Iterator[Tuple[int, int, int]]:
    """(front p-cell, back q-cell, sign) contributing to the cup on (p+q)-cell j."""
    r = p + q
    for front, back, sign in axis_splits(p, q):
        front_cell = c.face_index(r, j, {axis: 0 for axis in back})
        back_cell = c.face_index(r, j, {axis: 1 for axis in front})
        yield front_cell, back_cell, sign


def cup(c: CubeComplex, u: Cochain, v: Cochain) -> Cochain:
    """The cup product u ⌣ v; zero when p + q exceeds the dimension of c."""
    if u.coefficients != v.coefficients:
        raise AlgebraError("cup of cochains over different coefficients")
    p, q = u.degree, v.degree
    r = p + q
    if r > c.dimension:
        return Cochain(u.coefficients, r)
    left, right = u.as_dict(), v.as_dict()
    if not left or not right:
        return Cochain(u.coefficients, r)
    result: Dict[int, Any] = {}
    for j in range(c.count(r)):
        total = u.coefficients.domain.zero
        for front_cell, back_cell, sign in cup_terms(c, p, q, j):
            a = left.get(front_cell)
            if not a:
                continue
            b = right.get(back_cell)
            if not b:
                continue
            total = total + a * b if sign > 0 else total - a * b
        if total:
            result[j] = total
    return Cochain.from_dict(u.coefficients, r, result)


def evaluate(u: Cochain, chain: Dict[int, Any]) -> Any:
    """Pair a cochain with a chain given as {cell index: coefficient}."""
    values = u.as_dict()
    total = u.coefficients.domain.zero
    for j, coefficient in chain.items():
        value = values.get(j)
        if value:
            total += value * (u.coefficients.convert(coefficient) if isinstance(coefficient, int) else coefficient)
    return total


def random_cochain(
    c: CubeComplex,
    degree: int,
    coefficients: Union[str, Coefficients],
    rng: Any,
    spread: int = 3,
) -> Cochain:
    """Cochain with independent values drawn from -spread..spread via rng.randint."""
    ring = _ring(coefficients)
    values: List[Tuple[int, int]] = [
        (j, rng.randint(-spread, spread)) for j in range(c.count(degree))
    ]
    return Cochain.from_dict(ring, degree, dict(values))
