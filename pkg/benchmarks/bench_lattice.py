"""Benchmark the two lattice-counting kernels against each other.

The numba backend runs a sparse frontier DP over packed int64 states; the
numpy backend runs a dense cumulative-sum DP.  Both are exact and must agree;
this script reports wall times per workload.

    python benchmarks/bench_lattice.py

Select a single backend for the library itself with GZHESS_PURE_NUMPY=1.
"""

import time

from gzhess.faces import build_face, full_polytope
from gzhess.lattice import (
    available_backends,
    count_face_points,
    count_permutohedron_points,
)

FACE_WORKLOADS = [
    ("full n=4, lam=(6,4,2,0), t=0..6", full_polytope(4), (6, 4, 2, 0), range(7)),
    ("full n=5, lam=(4,3,2,1,0), t=0..10", full_polytope(5), (4, 3, 2, 1, 0), range(11)),
    (
        "worked n=4 face, lam=(9,6,3,0), t=0..5",
        build_face(4, {(1, 1), (1, 2)}, {(3, 4)}),
        (9, 6, 3, 0),
        range(6),
    ),
    (
        "sparse n=5 face, lam=(8,6,4,2,0), t=0..7",
        build_face(5, {(2, 3)}, {(1, 4), (3, 5)}),
        (8, 6, 4, 2, 0),
        range(8),
    ),
]

PERM_WORKLOADS = [
    ("perm n=4, lam=(9,6,3,0), t=0..3", (9, 6, 3, 0), range(4)),
    ("perm n=5, lam=(8,6,4,2,0), t=0..4", (8, 6, 4, 2, 0), range(5)),
]


def time_backend(fn, backend):
    start = time.perf_counter()
    values = fn(backend)
    return values, time.perf_counter() - start


def main():
    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    if "numba" in backends:
        # compile outside the timed region
        count_face_points(full_polytope(3), (2, 1, 0), 1, backend="numba")
        count_permutohedron_points((2, 1, 0), 1, backend="numba")

    print(f"\n{'workload':45s} " + " ".join(f"{b + ' (s)':>12s}" for b in backends))
    for label, face, lam, dilations in FACE_WORKLOADS:
        results = {}
        times = {}
        for b in backends:
            results[b], times[b] = time_backend(
                lambda bk: [count_face_points(face, lam, t, backend=bk) for t in dilations], b
            )
        assert len({tuple(v) for v in results.values()}) == 1, "backends disagree"
        print(f"{label:45s} " + " ".join(f"{times[b]:12.3f}" for b in backends))
    for label, lam, dilations in PERM_WORKLOADS:
        results = {}
        times = {}
        for b in backends:
            results[b], times[b] = time_backend(
                lambda bk: [count_permutohedron_points(lam, t, backend=bk) for t in dilations], b
            )
        assert len({tuple(v) for v in results.values()}) == 1, "backends disagree"
        print(f"{label:45s} " + " ".join(f"{times[b]:12.3f}" for b in backends))


if __name__ == "__main__":
    main()
