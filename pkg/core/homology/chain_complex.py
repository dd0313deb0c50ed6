"""
Cellular chain complexes of cube complexes and their homology.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import factorial
from typing import Any, Dict, List, Tuple, Union

from ..errors import DomainError, ModelError
from ..model.chains import Chain
from ..model.complex import CubeComplex
from .coefficients import COEFFICIENTS, Coefficients
from .sparse import Elimination, SparseMatrix

logger = logging.getLogger(__name__)


def boundary_columns(c: CubeComplex, d: int) -> List[Dict[int, int]]:
    """Integer columns of the d-th boundary map.

    The boundary of a d-cube is the sum over axes i = 1..d of
    (-1)^i (face_i@1 - face_i@0).
    """
    columns = []
    for pairs in c.faces[d]:
        column: Dict[int, int] = {}
        for axis, (f0, f1) in enumerate(pairs):
            sign = -1 if axis % 2 == 0 else 1
            column[f1] = column.get(f1, 0) + sign
            column[f0] = column.get(f0, 0) - sign
        columns.append({row: value for row, value in column.items() if value})
    return columns


@dataclass(frozen=True)
class ChainComplex:
    """Boundary matrices of a cube complex over one coefficient ring.

    `boundaries[d]` is the map C_d -> C_{d-1}; `boundaries[0]` is the zero
    map out of C_0.
    """

    complex: CubeComplex
    coefficients: Coefficients
    boundaries: Tuple[SparseMatrix, ...]

    @property
    def sizes(self) -> Tuple[int, ...]:
        return self.complex.counts

    def boundary(self, d: int) -> SparseMatrix:
        if 0 < d < len(self.boundaries):
            return self.boundaries[d]
        rows = self.complex.count(d - 1)
        return SparseMatrix((rows, self.complex.count(d)), tuple({} for _ in range(self.complex.count(d))), self.coefficients)


def _check_square_zero(c: CubeComplex, integer_columns: List[List[Dict[int, int]]]) -> None:
    for d in range(2, len(integer_columns)):
        lower = integer_columns[d - 1]
        for j, column in enumerate(integer_columns[d]):
            total: Dict[int, int] = {}
            for mid, a in column.items():
                for row, b in lower[mid].items():
                    total[row] = total.get(row, 0) + a * b
            if any(total.values()):
                raise ModelError(f"boundary of boundary is nonzero on {d}-cube {j}")


def chain_complex(c: CubeComplex, coefficients: Union[str, Coefficients] = "z") -> ChainComplex:
    """Assemble the boundary matrices and assert that they square to zero."""
    ring = COEFFICIENTS.get(coefficients) if isinstance(coefficients, str) else coefficients
    integer_columns: List[List[Dict[int, int]]] = [[]]
    for d in range(1, c.dimension + 1):
        integer_columns.append(boundary_columns(c, d))
    _check_square_zero(c, integer_columns)

    boundaries = [SparseMatrix((0, c.count(0)), tuple({} for _ in range(c.count(0))), ring)]
    for d in range(1, c.dimension + 1):
        boundaries.append(SparseMatrix.from_integer_columns(
            (c.count(d - 1), c.count(d)), integer_columns[d], ring
        ))
    return ChainComplex(c, ring, tuple(boundaries))


@dataclass(frozen=True)
class BettiProfile:
    """Betti numbers, integral torsion and Euler characteristic.

    Attributes:
        coefficients: Tag of the coefficient ring.
        betti: b_0 .. b_top.
        torsion: Invariant factors > 1 of H_d, per dimension (integers only).
        euler: Alternating sum of cell counts.
    """

    coefficients: str
    betti: Tuple[int, ...]
    torsion: Tuple[Tuple[int, ...], ...]
    euler: int

    @property
    def torsion_free(self) -> bool:
        return not any(self.torsion)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "coefficients": self.coefficients,
            "betti": list(self.betti),
            "torsion": [list(factors) for factors in self.torsion],
            "euler": self.euler,
        }


def betti(cc: ChainComplex) -> BettiProfile:
    """Ranks and torsion of the homology of cc."""
    c = cc.complex
    top = c.dimension
    eliminations: List[Elimination] = [Elimination(0)]
    for d in range(1, top + 1):
        elimination = cc.boundaries[d].eliminate()
        logger.debug(
            "Boundary %d (%dx%d, %d entries) has rank %d",
            d, c.count(d - 1), c.count(d), cc.boundaries[d].nnz, elimination.rank,
        )
        eliminations.append(elimination)
    eliminations.append(Elimination(0))

    numbers = []
    torsion = []
    for d in range(top + 1):
        numbers.append(c.count(d) - eliminations[d].rank - eliminations[d + 1].rank)
        torsion.append(eliminations[d + 1].torsion if not cc.coefficients.is_field else ())
    profile = BettiProfile(cc.coefficients.tag, tuple(numbers), tuple(torsion), c.euler)
    logger.info("Betti numbers over %s: %s", cc.coefficients.tag, list(profile.betti))
    return profile


def chain_vector(c: CubeComplex, chain: Chain) -> Dict[int, int]:
    """Coordinates of a chain in the cell basis of c."""
    if chain.graph != c.graph or chain.n != c.n:
        raise ModelError("chain does not belong to this complex")
    return {c.index(cube): coefficient for cube, coefficient in chain.terms}


def homology_class_is_zero(
    c: CubeComplex,
    chain: Chain,
    coefficients: Union[str, Coefficients] = "q",
) -> bool:
    """Whether a cycle bounds, tested by comparing ranks over a field."""
    cc = chain_complex(c, coefficients)
    if not cc.coefficients.is_field:
        raise DomainError("boundary membership is decided over a field")
    d = chain.dimension
    vector = chain_vector(c, chain)
    column = {row: cc.coefficients.convert(value) for row, value in vector.items()}
    column = {row: value for row, value in column.items() if value}
    if not column:
        return True
    if d + 1 > c.dimension:
        return False
    span = cc.boundaries[d + 1]
    return span.with_column(column).rank() == span.rank()


def betti_wedge_formula(n: int, k: int, l: int) -> int:
    """b_1 of Conf_n of the wedge of k leaves and l loops.

    1 + (n+k+l-2)!/(k+l-1)! * (n(k+2l-2) - (k+l) + 1)
    """
    if n < 1 or k < 0 or l < 0 or k + 2 * l < 3:
        raise DomainError("the wedge formula needs n >= 1 and k + 2l >= 3")
    ratio = factorial(n + k + l - 2) // factorial(k + l - 1)
    return 1 + ratio * (n * (k + 2 * l - 2) - (k + l) + 1)
