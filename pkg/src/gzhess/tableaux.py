"""Shifted tableaux attached to faces, and exact face volumes.

A face ``F`` partitions the triangular grid into saturated components; a
shifted tableau associated to ``F`` labels the components bijectively with
``1 .. n + dim F`` so that the labels weakly increase along rows and columns
of the grid and are *equal* exactly where the face forces equality.  Label 1
marks the component where the coordinate value is largest (always the
component of the top-left diagonal cell), so tableaux are precisely the
linear extensions of the component order induced by the grid inequalities.

Each tableau ``T`` contributes the monomial ``prod a_i^{p_i} / p_i!`` where
``p_i = d_{i+1} - d_i - 1`` and ``(d_1, ..., d_n)`` is the diagonal label
vector of ``T``; summing over all tableaux gives the relative volume of the
face as a polynomial in the root variables ``a_i`` with nonnegative
coefficients, homogeneous of degree ``dim F``.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator

from . import poly
from .faces import Cell, FaceDiagram, build_face, cells
from .lattice import ehrhart_volume_oracle  # re-exported oracle  # noqa: F401
from .poly import ALPHA, LAMBDA, ExactPolynomial


@dataclass(frozen=True)
class ShiftedTableau:
    """A component labeling of the grid; ``values[(i, j)]`` is the label."""

    n: int
    values: dict[Cell, int]

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.values[(k, k)] for k in range(1, self.n + 1))

    def exponent(self) -> tuple[int, ...]:
        """The gaps ``p_i = d_{i+1} - d_i - 1`` of the diagonal vector."""
        d = self.diagonal
        return tuple(d[i + 1] - d[i] - 1 for i in range(self.n - 1))


def _component_dag(f: FaceDiagram) -> tuple[int, list[set[int]], list[int]]:
    """Strict order on saturated components: k -> l when some cell of k lies
    immediately west or north of a cell of l (the coordinate strictly drops
    across distinct components, so the label strictly grows).  Acyclic by
    construction, since saturation already collapsed forced cycles.
    Returns (count, successor sets, predecessor counts)."""
    n = f.n
    m = len(f.components)
    succ: list[set[int]] = [set() for _ in range(m)]
    for i, j in cells(n):
        a = f.component_of((i, j))
        if j < n:
            b = f.component_of((i, j + 1))
            if a != b:
                succ[a].add(b)
        if i < j:
            b = f.component_of((i + 1, j))
            if a != b:
                succ[a].add(b)
    preds = [0] * m
    for a in range(m):
        for b in succ[a]:
            preds[b] += 1
    return m, succ, preds


def enumerate_tableaux(f: FaceDiagram) -> Iterator[ShiftedTableau]:
    """All shifted tableaux associated to ``f``, in a deterministic order.

    Backtracks over linear extensions of the component order; at each step the
    available components are tried in order of their minimal cell.  Raises on
    empty faces (they admit no tableau).
    """
    if f.is_empty:
        raise ValueError("empty face has no associated tableaux")
    m, succ, preds = _component_dag(f)
    comps = f.components
    remaining = list(preds)
    available = sorted(k for k in range(m) if remaining[k] == 0)
    labels: dict[int, int] = {}

    def rec(step: int, available: list[int]) -> Iterator[ShiftedTableau]:
        if step > m:
            values = {c: labels[f.component_of(c)] for c in cells(f.n)}
            yield ShiftedTableau(f.n, values)
            return
        for k in available:
            labels[k] = step
            freed = []
            for b in succ[k]:
                remaining[b] -= 1
                if remaining[b] == 0:
                    freed.append(b)
            nxt = sorted([x for x in available if x != k] + freed, key=lambda c: min(comps[c]))
            yield from rec(step + 1, nxt)
            for b in succ[k]:
                remaining[b] += 1
            del labels[k]

    return rec(1, sorted(available, key=lambda c: min(comps[c])))


def count_tableaux(f: FaceDiagram) -> int:
    return sum(1 for _ in enumerate_tableaux(f))


def tableau_count_with_exponent(f: FaceDiagram, p: tuple[int, ...]) -> int:
    """Number of tableaux whose diagonal vector equals
    ``(1, p_1 + 2, p_1 + p_2 + 3, ...)``."""
    if f.is_empty:
        raise ValueError("empty face has no associated tableaux")
    if len(p) != f.n - 1 or any(x < 0 for x in p):
        raise ValueError(f"exponent vector must be {f.n - 1} nonnegative integers")
    return sum(1 for t in enumerate_tableaux(f) if t.exponent() == tuple(p))


@lru_cache(maxsize=None)
def face_volume(f: FaceDiagram) -> ExactPolynomial:
    """Relative volume of a face as an alpha-basis polynomial.

    Empty faces get the zero polynomial so that sums over face families can
    include vanishing intersections without special-casing.
    """
    if f.is_empty:
        return poly.zero(ALPHA, f.n)
    terms: dict[tuple[int, ...], Fraction] = {}
    for t in enumerate_tableaux(f):
        p = t.exponent()
        weight = Fraction(1)
        for e in p:
            weight /= factorial(e)
        terms[p] = terms.get(p, Fraction(0)) + weight
    return ExactPolynomial(ALPHA, f.n, terms)


@lru_cache(maxsize=None)
def gz_volume_closed_form(n: int) -> ExactPolynomial:
    """The product formula for the volume of the whole polytope:
    ``prod_{i<j} (l_i - l_j) / (1! 2! ... (n-1)!)``, expanded exactly."""
    if n < 1:
        raise ValueError("need n >= 1")
    out = poly.constant(LAMBDA, n, 1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out * (poly.variable(LAMBDA, n, i) - poly.variable(LAMBDA, n, j))
    denom = 1
    for k in range(1, n):
        denom *= factorial(k)
    return poly.scale(out, Fraction(1, denom))


def _neighbor_face(f: FaceDiagram, cell: Cell, which: str) -> FaceDiagram | None:
    """Intersect with the equality joining ``cell`` to one neighbor; ``None``
    when that neighbor's indices leave the grid."""
    i, j = cell
    if which == "west":  # x_{i,j} = x_{i,j-1}
        return build_face(f.n, f.h_edges | {(i, j - 1)}, f.v_edges)
    if which == "north":  # x_{i,j} = x_{i-1,j}
        if i == 1:
            return None
        return build_face(f.n, f.h_edges, f.v_edges | {(i - 1, j)})
    if which == "south":  # x_{i,j} = x_{i+1,j}
        return build_face(f.n, f.h_edges, f.v_edges | {(i, j)})
    if which == "east":  # x_{i,j} = x_{i,j+1}
        if j == f.n:
            return None
        return build_face(f.n, f.h_edges | {(i, j)}, f.v_edges)
    raise ValueError(which)


def is_relation_admissible(f: FaceDiagram, cell: Cell) -> bool:
    """Preconditions of the four-neighbor volume relation: the cell is
    strictly above the diagonal and isolated, and every in-range neighbor
    (west, north, south, east) is isolated too."""
    i, j = cell
    if not (1 <= i < j <= f.n):
        return False
    if not f.is_isolated(cell):
        return False
    neighbors = [(i, j - 1), (i + 1, j)]
    if i > 1:
        neighbors.append((i - 1, j))
    if j < f.n:
        neighbors.append((i, j + 1))
    return all(f.is_isolated(c) for c in neighbors)


def neighbor_volume_relation(
    f: FaceDiagram, cell: Cell
) -> tuple[ExactPolynomial, ExactPolynomial, ExactPolynomial, ExactPolynomial]:
    """Volumes of the four faces obtained by gluing ``cell`` to each of its
    neighbors, ordered (west, north, south, east); out-of-range neighbors
    contribute the zero polynomial.  The first two always sum to the last two.
    """
    if not is_relation_admissible(f, cell):
        raise ValueError(f"cell {cell} does not satisfy the relation preconditions")
    out = []
    for which in ("west", "north", "south", "east"):
        g = _neighbor_face(f, cell, which)
        out.append(poly.zero(ALPHA, f.n) if g is None else face_volume(g))
    return tuple(out)
