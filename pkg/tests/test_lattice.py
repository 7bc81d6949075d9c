import random
from fractions import Fraction
from itertools import product

import pytest

from gzhess import poly
from gzhess.faces import (
    all_h_edges,
    all_v_edges,
    build_face,
    cells,
    cube_face,
    free_cells,
    full_polytope,
    simple_vertex,
)
from gzhess.lattice import (
    _face_program,
    _count_sparse_python,
    _scaled_pins,
    available_backends,
    count_face_points,
    count_permutohedron_points,
    default_backend,
    ehrhart_volume_oracle,
    perm_volume_oracle,
)
from gzhess.tableaux import face_volume

BACKENDS = available_backends()


def brute_force_count(face, lam, t):
    """Direct enumeration over all integer grid assignments."""
    n = face.n
    pins = {(k, k): t * lam[k - 1] for k in range(1, n + 1)}
    free = free_cells(n)
    lo, hi = t * lam[-1], t * lam[0]
    count = 0
    for vals in product(range(lo, hi + 1), repeat=len(free)):
        a = dict(pins)
        a.update(zip(free, vals))
        ok = True
        for i, j in cells(n):
            if j < n and a[(i, j)] < a[(i, j + 1)]:
                ok = False
                break
            if i < j and a[(i, j)] < a[(i + 1, j)]:
                ok = False
                break
            if j < n and (i, j) in face.h_edges and a[(i, j)] != a[(i, j + 1)]:
                ok = False
                break
            if i < j and (i, j) in face.v_edges and a[(i, j)] != a[(i + 1, j)]:
                ok = False
                break
        count += ok
    return count


@pytest.mark.parametrize("backend", BACKENDS)
def test_counts_against_brute_force(backend):
    rng = random.Random(7)
    for _ in range(15):
        face = build_face(
            3,
            {e for e in all_h_edges(3) if rng.random() < 0.3},
            {e for e in all_v_edges(3) if rng.random() < 0.3},
        )
        if face.is_empty:
            continue
        for t in (0, 1, 2):
            expected = brute_force_count(face, [3, 1, 0], t)
            assert count_face_points(face, (3, 1, 0), t, backend=backend) == expected


def test_backends_agree():
    if len(BACKENDS) < 2:
        pytest.skip("only one backend available")
    cases = [
        (full_polytope(4), (3, 2, 1, 0)),
        (build_face(4, {(1, 1), (1, 2)}, {(3, 4)}), (3, 2, 1, 0)),
        (cube_face(5, (2, 3, 1, 1)), (4, 3, 2, 1, 0)),
    ]
    for face, lam in cases:
        pins = _scaled_pins(list(lam), 2)
        sparse = _count_sparse_python(_face_program(face, pins), pins)
        for t in range(face.dimension + 1):
            counts = {b: count_face_points(face, lam, t, backend=b) for b in BACKENDS}
            assert len(set(counts.values())) == 1, counts
        assert sparse == count_face_points(face, lam, 2)


def test_count_validation():
    with pytest.raises(ValueError):
        count_face_points(full_polytope(3), (2, 2, 0), 1)  # not strictly decreasing
    with pytest.raises(ValueError):
        count_face_points(full_polytope(3), (Fraction(5, 2), 1, 0), 1)  # not integral
    with pytest.raises(ValueError):
        count_face_points(build_face(3, {(1, 1)}, {(1, 2)}), (2, 1, 0), 1)  # empty
    with pytest.raises(ValueError):
        count_face_points(full_polytope(3), (2, 1, 0), 1, backend="fortran")


def test_weyl_dimension_cross_check():
    # staircase lambda: the pattern count is (t+1)^(number of pairs)
    for n in (3, 4):
        lam = tuple(range(n - 1, -1, -1))
        for t in (0, 1, 2, 3):
            expected = (t + 1) ** (n * (n - 1) // 2)
            assert count_face_points(full_polytope(n), lam, t) == expected


def test_ehrhart_oracle_examples():
    vertex, _ = simple_vertex(3, (1, 1, 1))
    assert ehrhart_volume_oracle(vertex, (5, 2, 0)) == 1
    assert ehrhart_volume_oracle(full_polytope(3), (2, 1, 0)) == 1
    worked = build_face(4, {(1, 1), (1, 2)}, {(3, 4)})
    assert ehrhart_volume_oracle(worked, (3, 2, 1, 0)) == Fraction(10, 3)


def test_ehrhart_matches_formula_on_random_faces():
    rng = random.Random(404)
    lam = (4, 3, 2, 1, 0)
    done = 0
    while done < 12:
        face = build_face(
            5,
            {e for e in all_h_edges(5) if rng.random() < 0.35},
            {e for e in all_v_edges(5) if rng.random() < 0.35},
        )
        if face.is_empty:
            continue
        oracle = ehrhart_volume_oracle(face, lam)
        formula = poly.evaluate(face_volume(face), poly.alpha_point(lam))
        assert oracle == formula
        done += 1


@pytest.mark.parametrize("backend", BACKENDS)
def test_perm_volume_oracle(backend):
    assert perm_volume_oracle((1, 0), backend=backend) == 1
    assert perm_volume_oracle((2, 1, 0), backend=backend) == 3
    # the staircase permutohedron has volume n^(n-2)
    assert perm_volume_oracle((3, 2, 1, 0), backend=backend) == 16
    assert perm_volume_oracle((4, 3, 2, 1, 0), backend=backend) == 125


def test_perm_counts_brute_force():
    # direct check of the majorization test at n=3
    lam = (2, 1, 0)
    for t in (0, 1, 2):
        mu = [t * v for v in lam]
        total = sum(mu)
        expected = 0
        for y1 in range(0, mu[0] + 1):
            for y2 in range(0, mu[0] + 1):
                y3 = total - y1 - y2
                if not 0 <= y3 <= mu[0]:
                    continue
                srt = sorted((y1, y2, y3), reverse=True)
                if srt[0] <= mu[0] and srt[0] + srt[1] <= mu[0] + mu[1]:
                    expected += 1
        for backend in BACKENDS:
            assert count_permutohedron_points(lam, t, backend=backend) == expected


def test_env_flag_selects_numpy(monkeypatch):
    monkeypatch.setenv("GZHESS_PURE_NUMPY", "1")
    assert default_backend() == "numpy"
    monkeypatch.delenv("GZHESS_PURE_NUMPY")
    assert default_backend() == BACKENDS[0]
