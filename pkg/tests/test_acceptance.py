"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL
line.  Every equality is exact rational arithmetic (tolerance zero).

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

import random
import time
from fractions import Fraction
from itertools import product
from pathlib import Path

from gzhess import lattice, poly
from gzhess.cli import render_table_csv
from gzhess.faces import (
    all_h_edges,
    all_v_edges,
    build_face,
    cube_face,
    cube_indices,
    full_polytope,
)
from gzhess.kogan import reduced_kogan_faces
from gzhess.permutohedron import (
    GZPoint,
    diagonal_sums,
    project_to_decomposition,
    richardson_class,
    richardson_decomposition_check,
    verify_cube,
)
from gzhess.perms import (
    HessenbergFunction,
    all_hessenberg_functions,
    all_permutations,
    simple_reflection,
    toric_hessenberg_function,
)
from gzhess.pipeline import (
    hess_class_schubert,
    hess_face_decomposition,
    hess_volume_derivative,
    hess_volume_faces,
    hess_volume_schubert,
    positivity_report,
)
from gzhess.schubert import (
    SchubertExpansion,
    expand_in_schubert_basis,
    monk_multiply,
    schubert_polynomial,
    vol_lambda_of_class,
)
from gzhess.tableaux import (
    count_tableaux,
    face_volume,
    gz_volume_closed_form,
    is_relation_admissible,
    neighbor_volume_relation,
)

GOLDEN = Path(__file__).parent / "golden"
WORKED_FACE = build_face(4, {(1, 1), (1, 2)}, {(3, 4)})


class criterion:
    """Prints `criterion N: PASS/FAIL` around the body of a test."""

    def __init__(self, number: int, label: str):
        self.number = number
        self.label = label

    def __enter__(self):
        self.start = time.time()
        return self

    def __exit__(self, exc_type, exc, tb):
        status = "PASS" if exc_type is None else "FAIL"
        elapsed = time.time() - self.start
        print(f"criterion {self.number}: {status} ({self.label}, {elapsed:.1f}s)")
        return False


def default_lambda(n):
    return tuple(range(n - 1, -1, -1))


def test_criterion_1_postnikov_cross_check():
    with criterion(1, "closed form vs tableau sum, n=2..5"):
        for n in (2, 3, 4):
            assert poly.to_alpha_basis(gz_volume_closed_form(n)) == face_volume(full_polytope(n))
        start = time.time()
        assert poly.to_alpha_basis(gz_volume_closed_form(5)) == face_volume(full_polytope(5))
        assert time.time() - start < 60


def test_criterion_2_worked_face_example():
    with criterion(2, "worked n=4 face volume and tableau count"):
        assert count_tableaux(WORKED_FACE) == 7
        expected = {
            (0, 1, 2): Fraction(1, 2),
            (0, 2, 1): Fraction(1),
            (0, 3, 0): Fraction(1, 3),
            (1, 1, 1): Fraction(1),
            (1, 2, 0): Fraction(1, 2),
        }
        assert dict(face_volume(WORKED_FACE).terms) == expected


def test_criterion_3_hessenberg_example():
    with criterion(3, "h=(2,4,4,4) volume and face decomposition"):
        h = HessenbergFunction((2, 4, 4, 4))
        faces = hess_face_decomposition(h)
        assert len(faces) == 4
        expected_faces = sorted(
            f.edge_key()
            for f in [
                build_face(4, {(1, 1), (1, 2)}, set()),
                build_face(4, {(1, 1)}, {(2, 3)}),
                build_face(4, {(1, 1)}, {(2, 4)}),
                build_face(4, set(), {(2, 3), (3, 4)}),
            ]
        )
        assert sorted(f.edge_key() for f in faces) == expected_faces
        expected_vol = {
            (3, 0, 1): Fraction(1, 6),
            (2, 1, 1): Fraction(1),
            (1, 2, 1): Fraction(2),
            (0, 3, 1): Fraction(2, 3),
            (2, 0, 2): Fraction(1, 2),
            (1, 1, 2): Fraction(2),
            (0, 2, 2): Fraction(1),
            (1, 0, 3): Fraction(1, 6),
            (0, 1, 3): Fraction(1, 3),
        }
        assert dict(hess_volume_faces(h).terms) == expected_vol


def test_criterion_4_three_path_equality():
    with criterion(4, "faces = derivative = schubert for all h, n=3..5"):
        start = time.time()
        for n in (3, 4, 5):
            for h in all_hessenberg_functions(n):
                a = hess_volume_faces(h)
                b = hess_volume_derivative(h)
                c = hess_volume_schubert(h)
                assert a == b == c, str(h)
                assert all(v > 0 for v in a.terms.values())
        assert time.time() - start < 600


def test_criterion_5_tables_byte_identical():
    with criterion(5, "tables 1 and 2 match the committed transcriptions"):
        for which in (1, 2):
            golden = (GOLDEN / f"table{which}.csv").read_text()
            assert render_table_csv(which) == golden


def test_criterion_6_class_expansions_and_positivity():
    with criterion(6, "class expansions and strict positivity, n=3..6"):
        y3 = hess_class_schubert(toric_hessenberg_function(3))
        assert {str(w): c for w, c in y3.terms.items()} == {"2,1,3": 1, "1,3,2": 1}
        y4 = hess_class_schubert(toric_hessenberg_function(4))
        assert {str(w): c for w, c in y4.terms.items()} == {
            "1,4,3,2": 1,
            "2,3,4,1": 1,
            "2,4,1,3": 2,
            "3,1,4,2": 2,
            "3,2,1,4": 1,
            "4,1,2,3": 1,
        }
        start = time.time()
        for n in (3, 4, 5, 6):
            report = positivity_report(toric_hessenberg_function(n))
            assert report.all_strictly_positive, n
            assert report.min_coefficient >= 1
        assert time.time() - start < 900


def test_criterion_7_cube_decomposition():
    with criterion(7, "cube structure n=3..6 and volume sum n<=5"):
        import math

        for n in (3, 4, 5, 6):
            rs = cube_indices(n)
            assert len(rs) == math.factorial(n - 1)
            lam = default_lambda(n)
            for r in rs:
                report = verify_cube(n, r, lam)
                assert report.ok, (n, r, report.problems)
                assert report.facet_count == 2 * (n - 1)
                assert report.vertex_count == 2 ** (n - 1)
        for n in (3, 4, 5):
            lam = default_lambda(n)
            total = sum(
                (
                    poly.evaluate(face_volume(cube_face(n, r)), poly.alpha_point(lam))
                    for r in cube_indices(n)
                ),
                Fraction(0),
            )
            assert total == lattice.perm_volume_oracle(lam), n


def test_criterion_8_richardson_identity():
    with criterion(8, "Richardson class sum n=3..5 and per-cube volumes n<=4"):
        for n in (3, 4, 5):
            assert richardson_decomposition_check(n).ok, n
        for n in (2, 3, 4):
            for r in cube_indices(n):
                lhs = poly.to_alpha_basis(vol_lambda_of_class(richardson_class(n, r), n))
                assert lhs == face_volume(cube_face(n, r)), (n, r)


def _free_cells(n):
    return [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]


def test_criterion_9_property_suites():
    with criterion(9, "neighbor relation, lattice oracle, projection"):
        # neighbor volume relation: exhaustive at n=3,4
        for n in (3, 4):
            hs, vs = all_h_edges(n), all_v_edges(n)
            for hbits in product((0, 1), repeat=len(hs)):
                for vbits in product((0, 1), repeat=len(vs)):
                    face = build_face(
                        n,
                        {e for e, b in zip(hs, hbits) if b},
                        {e for e, b in zip(vs, vbits) if b},
                    )
                    for cell in _free_cells(n):
                        if is_relation_admissible(face, cell):
                            w, no, s, e = neighbor_volume_relation(face, cell)
                            assert w + no == s + e, (n, face, cell)
        # and 200 seeded random cases at n=5
        rng = random.Random(2024)
        done = 0
        while done < 200:
            face = build_face(
                5,
                {e for e in all_h_edges(5) if rng.random() < 0.25},
                {e for e in all_v_edges(5) if rng.random() < 0.25},
            )
            eligible = [c for c in _free_cells(5) if is_relation_admissible(face, c)]
            if not eligible:
                continue
            cell = rng.choice(eligible)
            w, no, s, e = neighbor_volume_relation(face, cell)
            assert w + no == s + e
            done += 1

        # lattice-count oracle against the tableau formula
        oracle_faces = [(f, (3, 2, 1, 0)) for f in hess_face_decomposition(HessenbergFunction((2, 4, 4, 4)))]
        oracle_faces += [(WORKED_FACE, (3, 2, 1, 0))]
        for n in (3, 4, 5):
            oracle_faces += [(cube_face(n, r), default_lambda(n)) for r in cube_indices(n)]
        rng = random.Random(99)
        added = 0
        while added < 100:
            face = build_face(
                5,
                {e for e in all_h_edges(5) if rng.random() < 0.3},
                {e for e in all_v_edges(5) if rng.random() < 0.3},
            )
            if face.is_empty:
                continue
            oracle_faces.append((face, (4, 3, 2, 1, 0)))
            added += 1
        for face, lam in oracle_faces:
            assert lattice.ehrhart_volume_oracle(face, lam) == poly.evaluate(
                face_volume(face), poly.alpha_point(lam)
            )

        # projection preserves the diagonal sums on 1000 random points
        rng = random.Random(11)
        for _ in range(1000):
            n = rng.choice([3, 4, 5])
            lam = default_lambda(n)
            vals = {}
            for j in range(2, n + 1):
                for i in range(1, j):
                    west = vals[(i, j - 1)] if j - 1 > i else Fraction(lam[i - 1])
                    north = vals[(i - 1, j)] if i > 1 else None
                    hi = west if north is None else min(west, north)
                    lo = Fraction(lam[j - 1])
                    vals[(i, j)] = Fraction(rng.randint(int(lo * 7), int(hi * 7)), 7)
            point = GZPoint(tuple(map(Fraction, lam)), vals)
            r, moved = project_to_decomposition(point)
            assert diagonal_sums(moved) == diagonal_sums(point)
            assert moved.on_face(cube_face(n, r))


def test_criterion_10_kogan_schubert_consistency():
    with criterion(10, "Kogan volume sums and Monk agreement over S_4"):
        for u in all_permutations(4):
            kogan_sum = poly.zero(poly.ALPHA, 4)
            for face in reduced_kogan_faces(4, u):
                kogan_sum = kogan_sum + face_volume(face)
            cls = SchubertExpansion(4, {u: Fraction(1)})
            schubert_vol = poly.to_alpha_basis(vol_lambda_of_class(cls, 4))
            assert kogan_sum == schubert_vol, u
        for w in all_permutations(4):
            for k in (1, 2, 3):
                via_monk = monk_multiply(SchubertExpansion(4, {w: Fraction(1)}), k)
                prod = schubert_polynomial(simple_reflection(4, k)) * schubert_polynomial(w)
                assert via_monk.terms == expand_in_schubert_basis(prod).terms, (w, k)
