"""
Sparse exact matrices and pivot elimination.

Elimination first clears every unit pivot (all nonzero entries over a
field, +-1 over the integers), choosing within a column the row with the
fewest entries. Over the integers the remaining block is diagonalized by
Euclidean row and column steps around a smallest-magnitude pivot, and the
diagonal is normalized into invariant factors.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd
from typing import Any, Dict, Iterable, List, Optional, Tuple

from sympy.polys.matrices import DomainMatrix

from .coefficients import Coefficients

logger = logging.getLogger(__name__)

Entries = Dict[int, Dict[int, Any]]


@dataclass(frozen=True)
class SparseMatrix:
    """Column-major sparse matrix over a coefficient ring.

    Attributes:
        shape: (rows, columns).
        columns: One {row: value} dict per column, zero values omitted.
        coefficients: Ring the values live in.
    """

    shape: Tuple[int, int]
    columns: Tuple[Dict[int, Any], ...]
    coefficients: Coefficients

    @classmethod
    def from_integer_columns(
        cls,
        shape: Tuple[int, int],
        columns: Iterable[Dict[int, int]],
        coefficients: Coefficients,
    ) -> SparseMatrix:
        converted = []
        for column in columns:
            entry = {}
            for row, value in column.items():
                element = coefficients.convert(value)
                if element:
                    entry[row] = element
            converted.append(entry)
        return cls(shape, tuple(converted), coefficients)

    def rows(self) -> Entries:
        by_row: Entries = {}
        for col, column in enumerate(self.columns):
            for row, value in column.items():
                by_row.setdefault(row, {})[col] = value
        return by_row

    def with_column(self, column: Dict[int, Any]) -> SparseMatrix:
        rows, cols = self.shape
        return SparseMatrix((rows, cols + 1), self.columns + (dict(column),), self.coefficients)

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix(self.rows(), self.shape, self.coefficients.domain)

    @property
    def nnz(self) -> int:
        return sum(len(column) for column in self.columns)

    def eliminate(self) -> Elimination:
        return _Eliminator(self).run()

    def rank(self) -> int:
        return self.eliminate().rank


@dataclass(frozen=True)
class Elimination:
    """Rank and, over the integers, the invariant factors larger than one."""

    rank: int
    torsion: Tuple[int, ...] = ()


def invariant_factors_from_diagonal(values: Iterable[int]) -> List[int]:
    """Turn nonzero diagonal entries into a divisibility chain."""
    chain = sorted(abs(int(v)) for v in values if v)
    for i in range(len(chain)):
        for j in range(i + 1, len(chain)):
            g = gcd(chain[i], chain[j])
            chain[i], chain[j] = g, chain[i] * chain[j] // g
    return chain


class _Eliminator:
    """Working copy of a matrix kept as mirrored row and column dicts."""

    def __init__(self, matrix: SparseMatrix):
        self.ring = matrix.coefficients
        self.cols: Entries = {c: dict(col) for c, col in enumerate(matrix.columns) if col}
        self.rows: Entries = {}
        for c, col in self.cols.items():
            for r, value in col.items():
                self.rows.setdefault(r, {})[c] = value
        self.shape = matrix.shape

    def _set(self, r: int, c: int, value: Any) -> None:
        if value:
            self.rows.setdefault(r, {})[c] = value
            self.cols.setdefault(c, {})[r] = value
        else:
            self.rows.get(r, {}).pop(c, None)
            self.cols.get(c, {}).pop(r, None)

    def _add_row(self, target: int, source: int, factor: Any) -> None:
        for c, value in list(self.rows[source].items()):
            self._set(target, c, self.rows.get(target, {}).get(c, 0) + factor * value)

    def _add_col(self, target: int, source: int, factor: Any) -> None:
        for r, value in list(self.cols[source].items()):
            self._set(r, target, self.cols.get(target, {}).get(r, 0) + factor * value)

    def _drop(self, r: int, c: int) -> None:
        for col in self.rows.pop(r, {}):
            self.cols[col].pop(r, None)
        for row in self.cols.pop(c, {}):
            if row in self.rows:
                self.rows[row].pop(c, None)

    def _unit_pass(self) -> int:
        found = 0
        for c in sorted(self.cols):
            column = self.cols.get(c)
            if not column:
                continue
            best: Optional[int] = None
            for r, value in column.items():
                if self.ring.is_unit(value) and (
                    best is None or len(self.rows[r]) < len(self.rows[best])
                ):
                    best = r
            if best is None:
                continue
            inverse = self.ring.inverse(column[best])
            for r in [row for row in column if row != best]:
                self._add_row(r, best, -column[r] * inverse)
            self._drop(best, c)
            found += 1
        return found

    def _smallest_entry(self) -> Optional[Tuple[int, int]]:
        best = None
        best_key = None
        for r, row in self.rows.items():
            for c, value in row.items():
                key = (abs(value), len(row) * len(self.cols[c]), r, c)
                if best_key is None or key < best_key:
                    best, best_key = (r, c), key
        return best

    def _euclid(self, r: int, c: int) -> int:
        """Clear row r and column c around a pivot, moving it when a remainder is smaller."""
        while True:
            pivot = self.rows[r][c]
            smaller = None
            for r2 in [row for row in self.cols[c] if row != r]:
                self._add_row(r2, r, -(self.cols[c][r2] // pivot))
                rest = self.cols[c].get(r2)
                if rest and (smaller is None or abs(rest) < abs(smaller[2])):
                    smaller = (r2, c, rest)
            if smaller is None:
                for c2 in [col for col in self.rows[r] if col != c]:
                    self._add_col(c2, c, -(self.rows[r][c2] // pivot))
                    rest = self.rows[r].get(c2)
                    if rest and (smaller is None or abs(rest) < abs(smaller[2])):
                        smaller = (r, c2, rest)
            if smaller is None:
                self._drop(r, c)
                return abs(int(pivot))
            r, c = smaller[0], smaller[1]

    def run(self) -> Elimination:
        rank = 0
        while True:
            found = self._unit_pass()
            rank += found
            if not found:
                break
        self.rows = {r: row for r, row in self.rows.items() if row}
        if not self.rows:
            return Elimination(rank)
        if self.ring.is_field:
            raise AssertionError("field elimination left nonzero entries")

        logger.debug(
            "Unit pivots gave rank %d; %d rows remain for Euclidean reduction",
            rank, len(self.rows),
        )
        diagonal = []
        while True:
            self.rows = {r: row for r, row in self.rows.items() if row}
            position = self._smallest_entry()
            if position is None:
                break
            diagonal.append(self._euclid(*position))
        chain = invariant_factors_from_diagonal(diagonal)
        return Elimination(rank + len(chain), tuple(d for d in chain if d > 1))
