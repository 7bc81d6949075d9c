"""Faces of the Gelfand-Zetlin polytope as equality-edge diagrams.

The polytope for a strictly decreasing ``lam = (l_1 > ... > l_n)`` lives in
the triangular grid of variables ``x_{i,j}`` (``1 <= i <= j <= n``) with the
diagonal pinned to ``x_{j,j} = l_j`` and the interlacing inequalities

    x_{i,j} >= x_{i,j+1}   and   x_{i,j} >= x_{i+1,j}

wherever both cells exist.  A face is cut out by turning some of those
inequalities into equalities:

* ``H(i, j)`` stands for ``x_{i,j} = x_{i,j+1}``  (valid for 1 <= i <= j <= n-1),
* ``V(i, j)`` stands for ``x_{i,j} = x_{i+1,j}``  (valid for 1 <= i < j <= n).

Everything structural (emptiness, dimension, tableaux) is read off the
*saturated* components of the equality graph.  Raw edge components are not
enough: a cell can be squeezed between two cells that the edges force equal
(for instance ``l_2 = x_23 = x_34`` pins ``x_23 >= l_3 >= x_34`` to
equality), so equalities the edges merely imply must be merged in too.
Saturation collapses the strongly connected components of the digraph whose
arcs follow the weak inequalities between distinct raw components: a
directed cycle forces every component on it to a single value.

After saturation, the face is empty exactly when a component contains two
distinct diagonal cells (the equalities would force ``l_i = l_j``).  This
check is complete: any remaining inconsistency would be a directed
pin-to-pin path ``l_j ~> l_i`` with ``i < j``, and the grid always carries
the opposite chain ``l_i ~> l_i+1 ~> ... ~> l_j`` along the main diagonal,
so both pins would already sit in one strongly connected component.  The
dimension of a non-empty face is the number of saturated components
containing no diagonal cell (one free coordinate each).
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .perms import Permutation

Cell = tuple[int, int]
Edge = tuple[int, int]


def _strongly_connected_components(arcs: list[set[int]]) -> list[list[int]]:
    """Tarjan's algorithm, iterative; input is an adjacency list."""
    n = len(arcs)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    out: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, iter(arcs[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(arcs[w])))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                out.append(comp)
    return out


def cells(n: int) -> list[Cell]:
    """All grid cells (i, j), 1 <= i <= j <= n, in row-major order."""
    return [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]


def free_cells(n: int) -> list[Cell]:
    """Off-diagonal cells (the actual coordinates of the polytope)."""
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def h_edge_valid(n: int, i: int, j: int) -> bool:
    return 1 <= i <= j <= n - 1


def v_edge_valid(n: int, i: int, j: int) -> bool:
    return 1 <= i < j <= n


def all_h_edges(n: int) -> list[Edge]:
    return [(i, j) for i in range(1, n) for j in range(i, n)]


def all_v_edges(n: int) -> list[Edge]:
    return [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]


@dataclass(frozen=True)
class FaceDiagram:
    """A face of the polytope, given by its equality edges."""

    n: int
    h_edges: frozenset[Edge]
    v_edges: frozenset[Edge]

    def __post_init__(self):
        for i, j in self.h_edges:
            if not h_edge_valid(self.n, i, j):
                raise ValueError(f"H({i},{j}) out of range for n={self.n}")
        for i, j in self.v_edges:
            if not v_edge_valid(self.n, i, j):
                raise ValueError(f"V({i},{j}) out of range for n={self.n}")

    @cached_property
    def _structure(self) -> tuple[tuple[frozenset[Cell], ...], dict[Cell, int]]:
        parent: dict[Cell, Cell] = {c: c for c in cells(self.n)}

        def find(c: Cell) -> Cell:
            while parent[c] != c:
                parent[c] = parent[parent[c]]
                c = parent[c]
            return c

        def union(a: Cell, b: Cell):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        for i, j in self.h_edges:
            union((i, j), (i, j + 1))
        for i, j in self.v_edges:
            union((i, j), (i + 1, j))
        raw_groups: dict[Cell, list[Cell]] = {}
        for c in cells(self.n):
            raw_groups.setdefault(find(c), []).append(c)
        raw = list(raw_groups.values())
        raw_index = {c: k for k, group in enumerate(raw) for c in group}

        # arcs along the weak inequalities between distinct raw components
        arcs: list[set[int]] = [set() for _ in raw]
        for i, j in cells(self.n):
            a = raw_index[(i, j)]
            if j < self.n:
                b = raw_index[(i, j + 1)]
                if a != b:
                    arcs[a].add(b)
            if i < j:
                b = raw_index[(i + 1, j)]
                if a != b:
                    arcs[a].add(b)

        scc = _strongly_connected_components(arcs)
        merged = []
        for group_ids in scc:
            cells_here = []
            for k in group_ids:
                cells_here.extend(raw[k])
            merged.append(frozenset(cells_here))
        comps = tuple(sorted(merged, key=min))
        index = {c: k for k, comp in enumerate(comps) for c in comp}
        return comps, index

    @property
    def components(self) -> tuple[frozenset[Cell], ...]:
        """Saturated equality components (raw components merged along forced
        cycles), ordered by minimal cell."""
        return self._structure[0]

    def component_of(self, cell: Cell) -> int:
        return self._structure[1][cell]

    @cached_property
    def is_empty(self) -> bool:
        return any(sum(1 for (i, j) in comp if i == j) >= 2 for comp in self.components)

    @cached_property
    def dimension(self) -> int:
        """Number of components free of diagonal cells; only defined for
        non-empty faces."""
        if self.is_empty:
            raise ValueError("empty face has no dimension")
        return sum(1 for comp in self.components if all(i != j for i, j in comp))

    def edge_key(self) -> tuple[tuple[str, int, int], ...]:
        """Canonical sortable encoding of the edge set."""
        return tuple(
            [("H", i, j) for i, j in sorted(self.h_edges)]
            + [("V", i, j) for i, j in sorted(self.v_edges)]
        )

    def is_isolated(self, cell: Cell) -> bool:
        """True iff the cell is equal to nothing else on the face: its
        saturated component is a singleton.  (Any edge touching the cell, or
        any implied equality, merges another cell into its component.)"""
        i, j = cell
        if not (1 <= i <= j <= self.n):
            raise ValueError(f"cell {cell} out of range for n={self.n}")
        return len(self.components[self.component_of(cell)]) == 1

    def __str__(self) -> str:
        return format_face_spec(self)


def build_face(n: int, h_edges=(), v_edges=()) -> FaceDiagram:
    return FaceDiagram(n, frozenset(h_edges), frozenset(v_edges))


def full_polytope(n: int) -> FaceDiagram:
    """The whole polytope (no equality edges)."""
    return build_face(n)


def intersect(f: FaceDiagram, g: FaceDiagram) -> FaceDiagram:
    """Intersection of faces: union of their equality edges."""
    if f.n != g.n:
        raise ValueError(f"size mismatch: {f.n} vs {g.n}")
    return FaceDiagram(f.n, f.h_edges | g.h_edges, f.v_edges | g.v_edges)


def parse_face_spec(n: int, spec: str) -> FaceDiagram:
    """Parse ``"H(1,1);H(1,2);V(3,4)"`` (empty string = whole polytope)."""
    h, v = set(), set()
    spec = spec.strip()
    if spec:
        for token in spec.split(";"):
            token = token.strip()
            kind = token[:1].upper()
            if kind not in ("H", "V") or not (token[1:2] == "(" and token.endswith(")")):
                raise ValueError(f"bad edge token {token!r}")
            i_str, j_str = token[2:-1].split(",")
            edge = (int(i_str), int(j_str))
            (h if kind == "H" else v).add(edge)
    return build_face(n, h, v)


def format_face_spec(f: FaceDiagram) -> str:
    tokens = [f"H({i},{j})" for i, j in sorted(f.h_edges)]
    tokens += [f"V({i},{j})" for i, j in sorted(f.v_edges)]
    return ";".join(tokens)


def vertex_permutation(f: FaceDiagram) -> Permutation:
    """For a 0-dimensional face: the permutation whose k-th value is the
    number of cells in the component of the diagonal cell (k, k)."""
    if f.is_empty or f.dimension != 0:
        raise ValueError("vertex permutation requires a non-empty 0-dimensional face")
    word = tuple(len(f.components[f.component_of((k, k))]) for k in range(1, f.n + 1))
    return Permutation(word)


def simple_vertex(n: int, d: tuple[int, ...]) -> tuple[FaceDiagram, Permutation]:
    """The simple vertex indexed by ``d = (d_0, ..., d_{n-1})`` with
    ``1 <= d_j <= n - j``, together with its permutation.

    On the j-th off-diagonal the equalities are ``x_{i,i+j} = x_{i,i+j+1}``
    for ``i < d_j`` and ``x_{i,i+j} = x_{i-1,i+j}`` for ``d_j < i <= n-j``
    (the latter normalized to the upward edge ``V(i-1, i+j)``).
    """
    if len(d) != n:
        raise ValueError(f"d must have length n={n}")
    for j, dj in enumerate(d):
        if not 1 <= dj <= n - j:
            raise ValueError(f"d_{j}={dj} out of range 1..{n - j}")
    h, v = set(), set()
    for j, dj in enumerate(d):
        for i in range(1, dj):
            h.add((i, i + j))
        for i in range(dj + 1, n - j + 1):
            v.add((i - 1, i + j))
    face = build_face(n, h, v)
    return face, vertex_permutation(face)


def cube_indices(n: int) -> list[tuple[int, ...]]:
    """All (n-1)! index vectors ``r`` with ``1 <= r_j <= n - j``, lex order."""
    if n < 2:
        raise ValueError("need n >= 2")
    ranges = [range(1, n - j + 1) for j in range(1, n)]
    return [tuple(r) for r in product(*ranges)]


def cube_face(n: int, r: tuple[int, ...]) -> FaceDiagram:
    """The (n-1)-dimensional face indexed by ``r``: on the j-th off-diagonal,
    ``x_{i,j+i} = x_{i,j+i-1}`` for ``i < r_j`` and ``x_{i,j+i} = x_{i+1,j+i}``
    for ``r_j < i <= n - j``.  These faces tile the permutohedron image."""
    if len(r) != n - 1:
        raise ValueError(f"r must have length n-1={n - 1}")
    for j, rj in enumerate(r, start=1):
        if not 1 <= rj <= n - j:
            raise ValueError(f"r_{j}={rj} out of range 1..{n - j}")
    h, v = set(), set()
    for j, rj in enumerate(r, start=1):
        for i in range(1, rj):
            h.add((i, j + i - 1))
        for i in range(rj + 1, n - j + 1):
            v.add((i, j + i))
    return build_face(n, h, v)


def vertex_coordinates(f: FaceDiagram, lam) -> dict[Cell, "object"]:
    """Coordinates of a 0-dimensional face: each cell takes the lambda value
    of the diagonal cell in its component."""
    from fractions import Fraction

    if f.is_empty:
        raise ValueError("empty face has no vertex")
    if f.dimension != 0:
        raise ValueError("vertex coordinates require a 0-dimensional face")
    lam = [Fraction(v) for v in lam]
    if len(lam) != f.n:
        raise ValueError(f"lambda must have length n={f.n}")
    if any(a <= b for a, b in zip(lam, lam[1:])):
        raise ValueError("lambda must be strictly decreasing")
    comp_value = {}
    for k, comp in enumerate(f.components):
        diag = [i for i, j in comp if i == j]
        comp_value[k] = lam[diag[0] - 1]
    return {c: comp_value[f.component_of(c)] for c in cells(f.n)}
