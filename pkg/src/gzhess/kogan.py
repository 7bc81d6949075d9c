"""Kogan and dual Kogan faces and their simple-reflection words.

A Kogan face uses only horizontal equality edges, a dual Kogan face only
vertical ones.  Each carries a word of simple reflections read off the
diagram one diagonal at a time, and a face is *reduced* when that word is a
reduced expression for the permutation it multiplies out to.

Reading order.  Write ``b = j - i`` for the diagonal band of a cell
``(i, j)`` (the main diagonal is band 0, the single cell ``(1, n)`` is band
``n - 1``).  An edge is indexed by the band of its endpoint closer to the
main diagonal; bands are visited outermost first.

* Kogan: ``H(i, j)`` contributes ``s_j``; within a band, edges are read
  downward, i.e. by increasing ``i``.
* dual Kogan: ``V(i, j)`` contributes ``s_{n-i}``; within a band, edges are
  read upward, i.e. by decreasing ``i``.

Words multiply left to right under the package convention
``(u * v)(i) = u(v(i))``.  These rules are pinned down by unit tests against
every captioned n = 3 panel and the n = 4 worked decomposition.
"""

from functools import lru_cache
from itertools import combinations

from .faces import FaceDiagram, all_h_edges, all_v_edges, build_face, format_face_spec
from .perms import Permutation, compose, identity, simple_reflection


def kogan_word(f: FaceDiagram) -> tuple[tuple[int, ...], Permutation, bool]:
    """Word, permutation and reducedness of a Kogan face."""
    if f.v_edges:
        raise ValueError("a Kogan face may only have horizontal edges")
    ordered = sorted(f.h_edges, key=lambda e: (-(e[1] - e[0]), e[0]))
    word = tuple(j for _, j in ordered)
    w = identity(f.n)
    for k in word:
        w = compose(w, simple_reflection(f.n, k))
    return word, w, w.length() == len(word)


def dual_kogan_word(f: FaceDiagram) -> tuple[tuple[int, ...], Permutation, bool]:
    """Word, permutation and reducedness of a dual Kogan face."""
    if f.h_edges:
        raise ValueError("a dual Kogan face may only have vertical edges")
    ordered = sorted(f.v_edges, key=lambda e: (-(e[1] - e[0] - 1), -e[0]))
    word = tuple(f.n - i for i, _ in ordered)
    w = identity(f.n)
    for k in word:
        w = compose(w, simple_reflection(f.n, k))
    return word, w, w.length() == len(word)


@lru_cache(maxsize=None)
def _reduced_kogan_by_perm(n: int) -> dict[Permutation, tuple[FaceDiagram, ...]]:
    """All reduced Kogan faces grouped by their permutation.  Only edge sets
    of size ``length(w)`` can be reduced for ``w``, so the scan goes size by
    size over the n(n-1)/2 candidate edges."""
    table: dict[Permutation, list[FaceDiagram]] = {}
    edges = all_h_edges(n)
    for size in range(len(edges) + 1):
        for subset in combinations(edges, size):
            face = build_face(n, subset, ())
            _, w, reduced = kogan_word(face)
            if reduced:
                table.setdefault(w, []).append(face)
    return {w: tuple(sorted(fs, key=FaceDiagram.edge_key)) for w, fs in table.items()}


@lru_cache(maxsize=None)
def _reduced_dual_kogan_by_perm(n: int) -> dict[Permutation, tuple[FaceDiagram, ...]]:
    table: dict[Permutation, list[FaceDiagram]] = {}
    edges = all_v_edges(n)
    for size in range(len(edges) + 1):
        for subset in combinations(edges, size):
            face = build_face(n, (), subset)
            _, w, reduced = dual_kogan_word(face)
            if reduced:
                table.setdefault(w, []).append(face)
    return {w: tuple(sorted(fs, key=FaceDiagram.edge_key)) for w, fs in table.items()}


def reduced_kogan_faces(n: int, u: Permutation) -> list[FaceDiagram]:
    """All reduced Kogan faces whose word multiplies out to ``u``."""
    if u.n != n:
        raise ValueError(f"permutation size {u.n} does not match n={n}")
    return list(_reduced_kogan_by_perm(n).get(u, ()))


def reduced_dual_kogan_faces(n: int, v: Permutation) -> list[FaceDiagram]:
    """All reduced dual Kogan faces whose word multiplies out to ``v``."""
    if v.n != n:
        raise ValueError(f"permutation size {v.n} does not match n={n}")
    return list(_reduced_dual_kogan_by_perm(n).get(v, ()))


def count_reduced_kogan_faces(n: int) -> int:
    return sum(len(fs) for fs in _reduced_kogan_by_perm(n).values())


def count_reduced_dual_kogan_faces(n: int) -> int:
    return sum(len(fs) for fs in _reduced_dual_kogan_by_perm(n).values())


def face_listing_line(f: FaceDiagram) -> str:
    """One-line listing: edge spec, the face word's permutation, reducedness."""
    if f.v_edges and f.h_edges:
        raise ValueError("listing format applies to Kogan or dual Kogan faces")
    _, w, reduced = dual_kogan_word(f) if f.v_edges else kogan_word(f)
    spec = format_face_spec(f)
    prefix = f"{spec} " if spec else ""
    return f"{prefix}w={w} reduced={'true' if reduced else 'false'}"
