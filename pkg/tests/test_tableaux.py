from fractions import Fraction
from itertools import product

import pytest

from gzhess import poly
from gzhess.faces import build_face, cube_face, full_polytope, simple_vertex
from gzhess.poly import evaluate, to_alpha_basis
from gzhess.tableaux import (
    count_tableaux,
    enumerate_tableaux,
    face_volume,
    gz_volume_closed_form,
    is_relation_admissible,
    neighbor_volume_relation,
    tableau_count_with_exponent,
)

WORKED_FACE = build_face(4, {(1, 1), (1, 2)}, {(3, 4)})


def test_tableau_counts():
    assert count_tableaux(full_polytope(3)) == 2
    assert count_tableaux(WORKED_FACE) == 7
    vertex, _ = simple_vertex(4, (2, 1, 2, 1))
    assert count_tableaux(vertex) == 1


def test_tableaux_are_valid_labelings():
    for t in enumerate_tableaux(WORKED_FACE):
        values = t.values
        n = t.n
        # weakly increasing with equality exactly on the face's edges
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                if j < n:
                    assert values[(i, j)] <= values[(i, j + 1)]
                    assert (values[(i, j)] == values[(i, j + 1)]) == (
                        (i, j) in WORKED_FACE.h_edges
                    )
                if i < j:
                    assert values[(i, j)] <= values[(i + 1, j)]
                    assert (values[(i, j)] == values[(i + 1, j)]) == (
                        (i, j) in WORKED_FACE.v_edges
                    )
        labels = set(values.values())
        assert labels == set(range(1, 4 + WORKED_FACE.dimension + 1))
        assert t.diagonal[0] == 1  # top lambda is always the maximum


def test_enumerate_empty_face_raises():
    with pytest.raises(ValueError):
        list(enumerate_tableaux(build_face(3, {(1, 1)}, {(1, 2)})))


def test_enumeration_deterministic():
    a = [t.diagonal for t in enumerate_tableaux(WORKED_FACE)]
    b = [t.diagonal for t in enumerate_tableaux(WORKED_FACE)]
    assert a == b


def test_tableau_count_with_exponent():
    assert tableau_count_with_exponent(WORKED_FACE, (0, 2, 1)) == 2
    assert tableau_count_with_exponent(full_polytope(3), (2, 1)) == 1
    assert tableau_count_with_exponent(full_polytope(3), (1, 2)) == 1
    # counts partitioned by exponent add up
    total = sum(
        tableau_count_with_exponent(WORKED_FACE, p)
        for p in product(range(4), repeat=3)
    )
    assert total == 7


def test_worked_face_volume():
    vol = face_volume(WORKED_FACE)
    expected = {
        (0, 1, 2): Fraction(1, 2),
        (0, 2, 1): Fraction(1),
        (0, 3, 0): Fraction(1, 3),
        (1, 1, 1): Fraction(1),
        (1, 2, 0): Fraction(1, 2),
    }
    assert dict(vol.terms) == expected


def test_full_gz3_volume():
    vol = face_volume(full_polytope(3))
    assert dict(vol.terms) == {(2, 1): Fraction(1, 2), (1, 2): Fraction(1, 2)}


def test_cube_face_volume_example():
    vol = face_volume(cube_face(4, (1, 1, 1)))
    expected = {
        (3, 0, 0): Fraction(1, 6),
        (2, 1, 0): Fraction(1, 2),
        (2, 0, 1): Fraction(1, 2),
        (1, 2, 0): Fraction(1, 2),
        (1, 1, 1): Fraction(1),
    }
    assert dict(vol.terms) == expected


def test_empty_face_volume_is_zero():
    assert face_volume(build_face(3, {(1, 1)}, {(1, 2)})).is_zero()


def test_face_volume_homogeneous_nonnegative():
    for n in (3, 4):
        for r_h in product((0, 1), repeat=3):
            f = build_face(
                n, {e for e, b in zip([(1, 1), (1, 2), (2, 2)], r_h) if b}, set()
            )
            vol = face_volume(f)
            assert all(c > 0 for c in vol.terms.values())
            degrees = {sum(e) for e in vol.terms}
            assert degrees in (set(), {f.dimension})


def test_gz_closed_form():
    assert gz_volume_closed_form(2) == poly.variable(poly.LAMBDA, 2, 1) - poly.variable(
        poly.LAMBDA, 2, 2
    )
    g3 = gz_volume_closed_form(3)
    assert evaluate(g3, (2, 1, 0)) == 1
    assert evaluate(gz_volume_closed_form(4), (3, 2, 1, 0)) == 1


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_postnikov_identity(n):
    assert to_alpha_basis(gz_volume_closed_form(n)) == face_volume(full_polytope(n))


def test_derivative_matches_facet_area():
    g3 = gz_volume_closed_form(3)
    d1 = poly.partial_derivative(g3, 1)
    assert to_alpha_basis(d1) == face_volume(build_face(3, {(1, 1)}, set()))


def test_neighbor_relation_example_n3():
    f = full_polytope(3)
    west, north, south, east = neighbor_volume_relation(f, (1, 2))
    assert north.is_zero()
    assert west == face_volume(build_face(3, {(1, 1)}, set()))
    assert south == face_volume(build_face(3, set(), {(1, 2)}))
    assert east == face_volume(build_face(3, {(1, 2)}, set()))
    assert west + north == south + east


def test_neighbor_relation_preconditions():
    with pytest.raises(ValueError):
        neighbor_volume_relation(build_face(3, {(1, 1)}, set()), (1, 2))
    with pytest.raises(ValueError):
        neighbor_volume_relation(full_polytope(3), (1, 1))  # diagonal cell


def test_neighbor_relation_exhaustive_n3():
    n = 3
    hs = [(1, 1), (1, 2), (2, 2)]
    vs = [(1, 2), (1, 3), (2, 3)]
    checked = 0
    for hb in product((0, 1), repeat=3):
        for vb in product((0, 1), repeat=3):
            f = build_face(n, {e for e, b in zip(hs, hb) if b}, {e for e, b in zip(vs, vb) if b})
            for cell in [(1, 2), (1, 3), (2, 3)]:
                if is_relation_admissible(f, cell):
                    w, no, s, e = neighbor_volume_relation(f, cell)
                    assert w + no == s + e
                    checked += 1
    assert checked > 0
