"""
Coefficient rings for chains and cochains.
Tags map to exact sympy domains; nothing here uses floating point.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Union

from sympy.polys.domains import GF, QQ, ZZ

from ..errors import AlgebraError


@dataclass(frozen=True)
class Coefficients:
    """A coefficient ring identified by a short tag ("z", "q", "f2", ...)."""

    tag: str
    name: str
    domain: Any

    @property
    def is_field(self) -> bool:
        return bool(self.domain.is_Field)

    @property
    def characteristic(self) -> int:
        return int(self.domain.characteristic())

    def convert(self, value: int) -> Any:
        return self.domain.convert(value)

    def inverse(self, value: Any) -> Any:
        if self.is_field:
            return self.domain.quo(self.domain.one, value)
        if value in (1, -1):
            return value
        raise AlgebraError(f"{value} is not invertible over {self.name}")

    def is_unit(self, value: Any) -> bool:
        if self.is_field:
            return bool(value)
        return value in (1, -1)

    def to_json(self, value: Any) -> Union[int, str]:
        """Plain JSON value: an int in 0..p-1 over GF(p), "a/b" over Q."""
        exact = self.domain.to_sympy(value)
        if self.characteristic:
            return int(exact) % self.characteristic
        if exact.is_Integer:
            return int(exact)
        return str(exact)

    def __str__(self) -> str:
        return self.tag


class CoefficientRegistry:
    """Central registry of coefficient tags."""

    def __init__(self):
        self._coefficients: Dict[str, Coefficients] = {}
        self._register_defaults()

    def register(self, coefficients: Coefficients):
        self._coefficients[coefficients.tag] = coefficients

    def get(self, tag: str) -> Coefficients:
        try:
            return self._coefficients[tag.lower()]
        except KeyError:
            raise AlgebraError(
                f"unknown coefficient tag {tag!r}; known: {', '.join(self.tags())}"
            ) from None

    def tags(self) -> List[str]:
        return sorted(self._coefficients)

    def _register_defaults(self):
        self.register(Coefficients("z", "integers", ZZ))
        self.register(Coefficients("q", "rationals", QQ))
        for p in (2, 3, 5, 7):
            self.register(Coefficients(f"f{p}", f"integers mod {p}", GF(p)))


# Global coefficient registry instance
COEFFICIENTS = CoefficientRegistry()
