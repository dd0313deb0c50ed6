"""
Cohomology rings of connected cube complexes over a field.

Each H^d gets an echelon basis of cocycle representatives together with a
dual family of cycles: pairing a cocycle with those cycles yields its
coordinates, and coboundaries pair to zero. Degree 1 uses a spanning tree
of the 1-skeleton; higher degrees use the echelon form of the boundary map.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple, Union

import networkx as nx
from sympy.polys.matrices import DomainMatrix

from ..errors import AlgebraError
from ..homology.chain_complex import boundary_columns
from ..homology.coefficients import COEFFICIENTS, Coefficients
from ..model.complex import CubeComplex, components
from .cochains import Cochain, cup_terms, evaluate

logger = logging.getLogger(__name__)

Vector = Dict[int, Any]
ProductKey = Tuple[int, int, int, int]


def echelon(rows: Dict[int, Vector], shape: Tuple[int, int], coefficients: Coefficients) -> Tuple[List[Vector], Tuple[int, ...]]:
    """Reduced row echelon form: nonzero rows in order and their pivot columns."""
    rows = {r: row for r, row in rows.items() if row}
    if not rows or not shape[0] or not shape[1]:
        return [], ()
    reduced, pivots = DomainMatrix(rows, shape, coefficients.domain).rref()
    entries = reduced.to_sparse().rep
    return [dict(entries.get(r, {})) for r in range(len(pivots))], tuple(pivots)


def kernel(rows: Dict[int, Vector], width: int, coefficients: Coefficients) -> List[Tuple[int, Vector]]:
    """Kernel basis of a matrix given by rows, one vector per free column.

    Each vector is 1 on its free column and 0 on the other free columns.
    """
    reduced, pivots = echelon(rows, (max(rows, default=-1) + 1, width), coefficients)
    one = coefficients.domain.one
    basis = []
    pivot_set = set(pivots)
    for free in range(width):
        if free in pivot_set:
            continue
        vector = {free: one}
        for row, pivot in zip(reduced, pivots):
            value = row.get(free)
            if value:
                vector[pivot] = -value
        basis.append((free, vector))
    return basis


def _restricted_rows(
    columns: Sequence[Vector],
    keep: Dict[int, int],
    coefficients: Coefficients,
) -> Dict[int, Vector]:
    """Transpose of the given integer columns, keeping only rows in `keep` (renumbered)."""
    rows: Dict[int, Vector] = {}
    for j, column in enumerate(columns):
        for row, value in column.items():
            if row in keep:
                element = coefficients.convert(value)
                if element:
                    rows.setdefault(j, {})[keep[row]] = element
    return rows


def _tree_paths(c: CubeComplex, tree_cells: Sequence[int]) -> Dict[int, Tuple[int, int, int]]:
    """parent[x] = (parent vertex, tree 1-cell, sign) with d(sign * cell) = x - parent."""
    tree = nx.Graph()
    tree.add_nodes_from(range(c.count(0)))
    for cell in tree_cells:
        (f0, f1), = c.faces[1][cell]
        tree.add_edge(f0, f1, cell=cell)
    parent = {}
    for up, down in nx.bfs_edges(tree, 0):
        cell = tree[up][down]["cell"]
        (f0, _), = c.faces[1][cell]
        parent[down] = (up, cell, 1 if f0 == down else -1)
    return parent


def _path_chain(parent: Dict[int, Tuple[int, int, int]], x: int) -> Dict[int, int]:
    chain: Dict[int, int] = {}
    while x in parent:
        up, cell, sign = parent[x]
        chain[cell] = chain.get(cell, 0) + sign
        x = up
    return chain


@dataclass(frozen=True)
class CohomologyRing:
    """H^* of a connected cube complex over a field, with structure constants.

    Attributes:
        complex: The complex the cochains live on.
        coefficients: The field.
        representatives: Per degree, cocycles representing the basis.
        functionals: Per degree, cycles dual to the basis.
        products: (p, i, q, j) -> coordinates of rep^p_i ⌣ rep^q_j in
            degree p + q, zero coordinates omitted.
    """

    complex: CubeComplex
    coefficients: Coefficients
    representatives: Tuple[Tuple[Cochain, ...], ...]
    functionals: Tuple[Tuple[Vector, ...], ...]
    products: Dict[ProductKey, Vector] = field(default_factory=dict)

    @property
    def dims(self) -> Tuple[int, ...]:
        return tuple(len(basis) for basis in self.representatives)

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def dim(self, d: int) -> int:
        return self.dims[d] if 0 <= d < len(self.dims) else 0

    def coordinates(self, w: Cochain) -> Vector:
        """Coordinates of the class of a cocycle in the chosen basis."""
        if w.degree > self.top:
            return {}
        result = {}
        for j, dual in enumerate(self.functionals[w.degree]):
            value = evaluate(w, dual)
            if value:
                result[j] = value
        return result

    def basis_product(self, p: int, i: int, q: int, j: int) -> Vector:
        return self.products.get((p, i, q, j), {})

    def product(self, p: int, a: Vector, q: int, b: Vector) -> Vector:
        """Product of classes given by coordinates in degrees p and q."""
        result: Vector = {}
        if p + q > self.top:
            return result
        for i, x in a.items():
            for j, y in b.items():
                for k, value in self.basis_product(p, i, q, j).items():
                    result[k] = result.get(k, self.coefficients.domain.zero) + x * y * value
        return {k: v for k, v in result.items() if v}

    def pairing_matrix(self, p: int) -> DomainMatrix:
        """Matrix of H^p x H^{top-p} -> H^top when H^top is one-dimensional."""
        q = self.top - p
        if self.dim(self.top) != 1:
            raise AlgebraError("pairing needs a one-dimensional top cohomology")
        zero = self.coefficients.domain.zero
        rows = [
            [self.basis_product(p, i, q, j).get(0, zero) for j in range(self.dim(q))]
            for i in range(self.dim(p))
        ]
        return DomainMatrix(rows, (self.dim(p), self.dim(q)), self.coefficients.domain)

    def pairing_rank(self, p: int) -> int:
        matrix = self.pairing_matrix(p)
        if not matrix.shape[0] or not matrix.shape[1]:
            return 0
        return matrix.rank()

    def is_graded_commutative(self) -> bool:
        for (p, i, q, j), value in self.products.items():
            sign = -1 if (p * q) % 2 else 1
            swapped = self.basis_product(q, j, p, i)
            if set(value) != set(swapped):
                return False
            if any(value[k] != swapped[k] * sign for k in value):
                return False
        return True

    def is_associative(self) -> bool:
        """(a ⌣ b) ⌣ c == a ⌣ (b ⌣ c) on every triple of basis classes."""
        one = self.coefficients.domain.one
        for p in range(self.top + 1):
            for q in range(self.top + 1 - p):
                for r in range(self.top + 1 - p - q):
                    for i in range(self.dim(p)):
                        for j in range(self.dim(q)):
                            ab = self.basis_product(p, i, q, j)
                            for k in range(self.dim(r)):
                                left = self.product(p + q, ab, r, {k: one})
                                bc = self.basis_product(q, j, r, k)
                                right = self.product(p, {i: one}, q + r, bc)
                                if left != right:
                                    return False
        return True

    def has_unit(self) -> bool:
        one = self.coefficients.domain.one
        return all(
            self.basis_product(0, 0, q, j) == {j: one}
            for q in range(self.top + 1)
            for j in range(self.dim(q))
        )


def _degree_zero(c: CubeComplex, coefficients: Coefficients) -> Tuple[Cochain, Vector]:
    one = coefficients.domain.one
    unit = Cochain.from_dict(coefficients, 0, {v: one for v in range(c.count(0))})
    return unit, {0: one}


def _degree_one(c: CubeComplex, coefficients: Coefficients) -> Tuple[List[Cochain], List[Vector]]:
    skeleton = c.one_skeleton()
    tree_cells = sorted(key for _, _, key in nx.minimum_spanning_edges(
        skeleton, algorithm="kruskal", keys=True, data=False
    ))
    in_tree = set(tree_cells)
    loose = [e for e in range(c.count(1)) if e not in in_tree]
    position = {e: k for k, e in enumerate(loose)}
    rows = _restricted_rows(boundary_columns(c, 2), position, coefficients) if c.dimension >= 2 else {}
    parent = _tree_paths(c, tree_cells)

    reps, duals = [], []
    for free, vector in kernel(rows, len(loose), coefficients):
        reps.append(Cochain.from_dict(coefficients, 1, {loose[k]: v for k, v in vector.items()}))
        edge = loose[free]
        (f0, f1), = c.faces[1][edge]
        cycle = {edge: 1}
        for cell, sign in _path_chain(parent, f1).items():
            cycle[cell] = cycle.get(cell, 0) + sign
        for cell, sign in _path_chain(parent, f0).items():
            cycle[cell] = cycle.get(cell, 0) - sign
        duals.append({
            cell: coefficients.convert(value) for cell, value in cycle.items()
            if coefficients.convert(value)
        })
    return reps, duals


def _degree_at_least_two(c: CubeComplex, d: int, coefficients: Coefficients) -> Tuple[List[Cochain], List[Vector]]:
    columns = boundary_columns(c, d)
    rows: Dict[int, Vector] = {}
    for j, column in enumerate(columns):
        for row, value in column.items():
            element = coefficients.convert(value)
            if element:
                rows.setdefault(row, {})[j] = element
    reduced, pivots = echelon(rows, (c.count(d - 1), c.count(d)), coefficients)
    pivot_set = set(pivots)
    rest = [j for j in range(c.count(d)) if j not in pivot_set]
    position = {j: k for k, j in enumerate(rest)}

    if d < c.dimension:
        upper = _restricted_rows(boundary_columns(c, d + 1), position, coefficients)
        basis = kernel(upper, len(rest), coefficients)
    else:
        basis = [(k, {k: coefficients.domain.one}) for k in range(len(rest))]

    reps, duals = [], []
    for free, vector in basis:
        reps.append(Cochain.from_dict(coefficients, d, {rest[k]: v for k, v in vector.items()}))
        cell = rest[free]
        dual = {cell: coefficients.domain.one}
        for row, pivot in zip(reduced, pivots):
            value = row.get(cell)
            if value:
                dual[pivot] = -value
        duals.append(dual)
    return reps, duals


def _tabulate(
    c: CubeComplex,
    coefficients: Coefficients,
    representatives: Sequence[Sequence[Cochain]],
    functionals: Sequence[Sequence[Vector]],
) -> Dict[ProductKey, Vector]:
    products: Dict[ProductKey, Vector] = {}
    zero = coefficients.domain.zero
    top = len(representatives) - 1
    values = [[rep.as_dict() for rep in level] for level in representatives]
    for r in range(top + 1):
        for k, dual in enumerate(functionals[r]):
            for p in range(r + 1):
                q = r - p
                if not values[p] or not values[q]:
                    continue
                form: Dict[int, Dict[int, Any]] = {}
                for sigma, weight in dual.items():
                    for front, back, sign in cup_terms(c, p, q, sigma):
                        row = form.setdefault(front, {})
                        row[back] = row.get(back, zero) + (weight if sign > 0 else -weight)
                for i, left in enumerate(values[p]):
                    partial: Dict[int, Any] = {}
                    for front, row in form.items():
                        a = left.get(front)
                        if not a:
                            continue
                        for back, weight in row.items():
                            partial[back] = partial.get(back, zero) + a * weight
                    for j, right in enumerate(values[q]):
                        total = zero
                        for back, weight in partial.items():
                            b = right.get(back)
                            if b:
                                total += weight * b
                        if total:
                            products.setdefault((p, i, q, j), {})[k] = total
    return products


def ring(c: CubeComplex, coefficients: Union[str, Coefficients] = "q") -> CohomologyRing:
    """Basis, dual cycles and multiplication table of H^*(c).

    Raises:
        AlgebraError: Coefficients are not a field or c is disconnected.
    """
    field_ = COEFFICIENTS.get(coefficients) if isinstance(coefficients, str) else coefficients
    if not field_.is_field:
        raise AlgebraError(f"cohomology rings are computed over a field, not {field_.name}")
    if components(c) != 1:
        raise AlgebraError("cohomology ring needs a connected complex")

    unit, point = _degree_zero(c, field_)
    representatives: List[Tuple[Cochain, ...]] = [(unit,)]
    functionals: List[Tuple[Vector, ...]] = [(point,)]
    for d in range(1, c.dimension + 1):
        reps, duals = _degree_one(c, field_) if d == 1 else _degree_at_least_two(c, d, field_)
        representatives.append(tuple(reps))
        functionals.append(tuple(duals))

    products = _tabulate(c, field_, representatives, functionals)
    result = CohomologyRing(c, field_, tuple(representatives), tuple(functionals), products)
    logger.info(
        "Cohomology ring over %s of Conf_%d(%s): dims %s, %d nonzero basis products",
        field_.tag, c.n, c.graph.label(), list(result.dims), len(products),
    )
    return result
