"""The cube decomposition of the permutohedron and its class-level shadow.

The polytope projects onto the permutohedron by summing each off-diagonal of
the triangular grid.  Restricted to the ``(n-1)!`` faces indexed by
:func:`gzhess.faces.cube_indices`, the projection is a volume-preserving
bijection; each image is a combinatorial cube whose vertices are vertices of
the permutohedron.  This module materializes the projection, the
redistribution step used to invert it, the cube verification, the
Bruhat-extremal vertices of each cube face, and the matching identity between
the toric Hessenberg class and a sum of Richardson classes.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping

from .faces import (
    Cell,
    FaceDiagram,
    build_face,
    cube_face,
    cube_indices,
    vertex_coordinates,
    vertex_permutation,
)
from .lattice import perm_volume_oracle  # noqa: F401  (re-exported oracle)
from .perms import Permutation, compose, longest_element, product_of_word, toric_hessenberg_function
from .pipeline import hess_class_schubert, length_additive_pairs
from .schubert import SchubertExpansion, expand_in_schubert_basis, schubert_polynomial


@dataclass(frozen=True)
class GZPoint:
    """A concrete point of ``GZ(lam)``: rational values on the off-diagonal
    cells, with the diagonal pinned to ``lam``."""

    lam: tuple[Fraction, ...]
    entries: Mapping[Cell, Fraction]

    def __post_init__(self):
        lam = tuple(Fraction(v) for v in self.lam)
        object.__setattr__(self, "lam", lam)
        n = len(lam)
        if any(a <= b for a, b in zip(lam, lam[1:])):
            raise ValueError("lambda must be strictly decreasing")
        entries = {tuple(c): Fraction(v) for c, v in self.entries.items()}
        expected = {(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
        if set(entries) != expected:
            raise ValueError("entries must cover exactly the off-diagonal cells")
        object.__setattr__(self, "entries", entries)
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                if j < n and self.value(i, j) < self.value(i, j + 1):
                    raise ValueError(f"interlacing violated at x[{i},{j}] < x[{i},{j + 1}]")
                if i < j and self.value(i, j) < self.value(i + 1, j):
                    raise ValueError(f"interlacing violated at x[{i},{j}] < x[{i + 1},{j}]")

    @property
    def n(self) -> int:
        return len(self.lam)

    def value(self, i: int, j: int) -> Fraction:
        return self.lam[i - 1] if i == j else self.entries[(i, j)]

    def on_face(self, f: FaceDiagram) -> bool:
        """True iff every equality edge of ``f`` holds at this point."""
        return all(self.value(i, j) == self.value(i, j + 1) for i, j in f.h_edges) and all(
            self.value(i, j) == self.value(i + 1, j) for i, j in f.v_edges
        )


def diagonal_sums(p: GZPoint) -> tuple[Fraction, ...]:
    """The vector ``(y_0, ..., y_{n-1})`` with ``y_k = sum_i x_{i,i+k}``;
    ``y_0`` is the fixed total of ``lam``."""
    n = p.n
    return tuple(sum((p.value(i, i + k) for i in range(1, n - k + 1)), Fraction(0)) for k in range(n))


def to_permutohedron_point(p: GZPoint) -> tuple[Fraction, ...]:
    """Consecutive differences of the diagonal sums; lands in the
    permutohedron of ``lam`` and has coordinate total ``y_0``."""
    y = diagonal_sums(p)
    return tuple(y[k] - y[k + 1] for k in range(p.n - 1)) + (y[p.n - 1],)


def _redistribute_sum(a: list[Fraction], total_b: Fraction) -> tuple[int, tuple[Fraction, ...]]:
    """Core of the redistribution: given a weakly decreasing ``a`` and a
    target total in ``[sum(a) - a_1, sum(a) - a_m]``, build the unique vector
    ``(a_1, .., a_{k-1}, free, a_{k+2}, .., a_m)`` with that total and
    ``a_k >= free >= a_{k+1}``.  ``k`` is the smallest admissible index,
    which keeps boundary ties deterministic.
    """
    m = len(a)
    total_a = sum(a)
    if not (total_a - a[0] <= total_b <= total_a - a[-1]):
        raise ValueError("target total outside the feasible range")
    for k in range(1, m):
        if total_b <= total_a - a[k]:
            bk = total_b - (total_a - a[k - 1] - a[k])
            out = a[: k - 1] + [bk] + a[k + 1 :]
            assert a[k - 1] >= bk >= a[k] and sum(out) == total_b
            return k, tuple(out)
    raise AssertionError("unreachable: the range check guarantees an admissible k")


def redistribute(a, b):
    """Move an interlacing vector onto a one-free-slot configuration with the
    same total: returns ``(k, b')`` with ``b'_j = a_j`` for ``j < k``,
    ``b'_j = a_{j+1}`` for ``j > k`` and ``a_k >= b'_k >= a_{k+1}``.
    """
    a = [Fraction(v) for v in a]
    b = [Fraction(v) for v in b]
    m = len(a)
    if len(b) != m - 1:
        raise ValueError("b must be one shorter than a")
    if not all(x > y for x, y in zip(a, a[1:])):
        raise ValueError("a must be strictly decreasing")
    for j in range(m - 1):
        if not a[j] >= b[j] >= a[j + 1]:
            raise ValueError(f"b_{j + 1} does not interlace a")
    return _redistribute_sum(a, sum(b))


def project_to_decomposition(p: GZPoint) -> tuple[tuple[int, ...], GZPoint]:
    """Slide a point onto the cube decomposition: returns ``(r, p')`` with
    ``p'`` on the face indexed by ``r`` and the diagonal sums unchanged.

    Works one off-diagonal at a time.  Each step only consumes the *sum* of
    the original off-diagonal: the original entries need not interlace the
    already-projected previous diagonal, but their sum always lies in the
    feasible range, which is all the redistribution needs.  Boundary points
    shared by two cubes resolve to the smaller index.
    """
    n = p.n
    prev = list(p.lam)
    r: list[int] = []
    new_entries: dict[Cell, Fraction] = {}
    for k in range(1, n):
        diag_total = sum((p.value(i, i + k) for i in range(1, n - k + 1)), Fraction(0))
        kk, moved = _redistribute_sum(prev, diag_total)
        r.append(kk)
        for i, v in enumerate(moved, start=1):
            new_entries[(i, i + k)] = v
        prev = list(moved)
    out = GZPoint(p.lam, new_entries)
    rt = tuple(r)
    assert diagonal_sums(out) == diagonal_sums(p)
    assert out.on_face(cube_face(n, rt))
    return rt, out


def _vertex_face(n: int, r: tuple[int, ...], choices: tuple[int, ...]) -> FaceDiagram:
    """Cut the cube face down to a vertex: for each j, pick the row-side
    (0: glue to the west neighbor) or the column-side (1: glue downward)."""
    base = cube_face(n, r)
    h, v = set(base.h_edges), set(base.v_edges)
    for j, (rj, pick) in enumerate(zip(r, choices), start=1):
        if pick == 0:
            h.add((rj, j + rj - 1))
        else:
            v.add((rj, j + rj))
    return build_face(n, h, v)


def bruhat_extremes(n: int, r: tuple[int, ...]) -> tuple[Permutation, Permutation]:
    """Bruhat-minimal and -maximal vertices of the cube face, as
    permutations: gluing every free slot downward gives the minimum, gluing
    every slot to its row gives the maximum."""
    vmin = _vertex_face(n, r, (1,) * (n - 1))
    vmax = _vertex_face(n, r, (0,) * (n - 1))
    return vertex_permutation(vmin), vertex_permutation(vmax)


@dataclass(frozen=True)
class CubeReport:
    n: int
    r: tuple[int, ...]
    ok: bool
    facet_count: int
    vertex_count: int
    problems: tuple[str, ...]


def verify_cube(n: int, r: tuple[int, ...], lam: Iterable) -> CubeReport:
    """Check the combinatorial cube structure of one decomposition face:
    2(n-1) facet constraints, ``2^{n-1}`` distinct simple vertices whose
    projections are vertices of the permutohedron, and 4-vertex 2-faces."""
    lam = [Fraction(v) for v in lam]
    problems: list[str] = []
    base = cube_face(n, r)
    if base.is_empty or base.dimension != n - 1:
        problems.append("face is not (n-1)-dimensional")
    vertices: dict[tuple[int, ...], Permutation] = {}
    images = set()
    for choices in product((0, 1), repeat=n - 1):
        f = _vertex_face(n, r, choices)
        if f.is_empty or f.dimension != 0:
            problems.append(f"choice {choices} does not give a vertex")
            continue
        w = vertex_permutation(f)
        vertices[choices] = w
        coords = vertex_coordinates(f, lam)
        point = GZPoint(tuple(lam), {c: coords[c] for c in coords if c[0] != c[1]})
        image = to_permutohedron_point(point)
        if sorted(image, reverse=True) != sorted(lam, reverse=True):
            problems.append(f"projection of vertex {choices} is not a permutation of lambda")
        images.add(image)
    if len(set(vertices.values())) != 2 ** (n - 1):
        problems.append("vertices are not pairwise distinct")
    if len(images) != 2 ** (n - 1):
        problems.append("projected vertices are not pairwise distinct")
    # every 2-face (two free binary slots) must have exactly 4 distinct corners
    free_pairs = [(x, y) for x in range(n - 1) for y in range(x + 1, n - 1)]
    for x, y in free_pairs:
        others = [k for k in range(n - 1) if k not in (x, y)]
        for fixed in product((0, 1), repeat=len(others)):
            corners = set()
            for cx, cy in product((0, 1), repeat=2):
                choices = [0] * (n - 1)
                for k, val in zip(others, fixed):
                    choices[k] = val
                choices[x], choices[y] = cx, cy
                corners.add(vertices[tuple(choices)])
            if len(corners) != 4:
                problems.append(f"2-face at slots ({x},{y}) fixed={fixed} has {len(corners)} vertices")
    return CubeReport(
        n=n,
        r=tuple(r),
        ok=not problems,
        facet_count=2 * (n - 1),
        vertex_count=len(set(vertices.values())),
        problems=tuple(problems),
    )


@lru_cache(maxsize=None)
def richardson_class(n: int, r: tuple[int, ...]) -> SchubertExpansion:
    """Class of the Richardson variety attached to ``r``: the product of the
    Schubert classes of the cube face's Bruhat-extremal vertices."""
    rmin, rmax = bruhat_extremes(n, r)
    w0 = longest_element(n)
    rep = schubert_polynomial(rmin) * schubert_polynomial(compose(w0, rmax))
    return expand_in_schubert_basis(rep)


@dataclass(frozen=True)
class RichardsonReport:
    n: int
    ok: bool
    pair_count_ok: bool
    class_sum: SchubertExpansion
    hess_class: SchubertExpansion


def richardson_decomposition_check(n: int) -> RichardsonReport:
    """Verify that the Richardson classes of the cube faces add up to the
    class of the toric Hessenberg variety, and that factor pairs of its
    Hessenberg function are exactly the (n-1)! pairs with ``u(n) = n``."""
    h1 = toric_hessenberg_function(n)
    pairs = length_additive_pairs(h1)
    wanted = {u.word for u in _perms_fixing_last(n)}
    pair_count_ok = len(pairs) == _factorial(n - 1) and {p.u.word for p in pairs} == wanted
    total = SchubertExpansion(n, {})
    for r in cube_indices(n):
        total = total + richardson_class(n, r)
    hess = hess_class_schubert(h1)
    return RichardsonReport(
        n=n,
        ok=pair_count_ok and total.terms == hess.terms,
        pair_count_ok=pair_count_ok,
        class_sum=total,
        hess_class=hess,
    )


def _perms_fixing_last(n: int):
    from .perms import all_permutations

    return [w for w in all_permutations(n) if w(n) == n]


def _factorial(k: int) -> int:
    from math import factorial

    return factorial(k)


def shift_word(n: int) -> Permutation:
    """The cycle ``s_{n-1} s_{n-2} ... s_1`` relating the two Bruhat extremes."""
    w, _ = product_of_word(n, tuple(range(n - 1, 0, -1)))
    return w
