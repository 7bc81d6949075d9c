"""Lattice-point counting oracles with interchangeable kernels.

Two independent volume oracles live here:

* ``ehrhart_volume_oracle`` -- relative volume of a polytope face, obtained by
  counting integer points of the face at dilations ``t = 0 .. dim F`` (one
  integer per free component, a unimodular chart) and extracting the leading
  Ehrhart coefficient by finite differences.
* ``perm_volume_oracle`` -- relative volume of the permutohedron, counting
  integer points of its dilates in the chart that drops the last coordinate.

Both counts reduce to integer dynamic programs / scans, the only numeric hot
loops in the package.  Each has two implementations:

* ``numba``: sparse frontier DP over packed int64 states (JIT-compiled),
* ``numpy``: dense tensor DP driven by reversed cumulative sums.

The active kernel is picked per call, by the ``backend=`` argument, else the
environment flag ``GZHESS_PURE_NUMPY=1`` (forces numpy), else numba when it
imports.  Results are identical; ``benchmarks/bench_lattice.py`` compares
speed.  When the a-priori count bound does not fit in int64 the code drops to
exact big-integer arithmetic regardless of backend.
"""

import os
from fractions import Fraction
from math import comb, factorial

import numpy as np

from .faces import FaceDiagram

_INT64_SAFE = 1 << 62

# program row layout: slot, north_slot, eq_west, eq_north, eq_pin, lower_bound
_PROG_COLS = 6


def available_backends() -> list[str]:
    out = ["numpy"]
    try:
        import numba  # noqa: F401

        out.insert(0, "numba")
    except ImportError:
        pass
    return out


def default_backend() -> str:
    if os.environ.get("GZHESS_PURE_NUMPY", "") == "1":
        return "numpy"
    return available_backends()[0]


def _scaled_pins(lam: list[int], t: int) -> list[int]:
    """Diagonal pins at dilation t, shifted so the smallest is 0."""
    return [t * (v - lam[-1]) for v in lam]


def _face_program(face: FaceDiagram, pins: list[int]) -> np.ndarray:
    """Sweep schedule: columns left to right, each column top to bottom.

    Cell (i, j) reads its west value from frontier slot i-1 and its north
    value from slot i-2 (the slot a just-placed column-j cell occupies); the
    lower bound is the column pin, valid because the column chain forces
    every entry down to it.
    """
    n = face.n
    rows = []
    for j in range(2, n + 1):
        for i in range(1, j):
            eq_west = (i, j - 1) in face.h_edges
            eq_north = i >= 2 and (i - 1, j) in face.v_edges
            eq_pin = (i == j - 1) and (j - 1, j) in face.v_edges
            rows.append([i - 1, i - 2, int(eq_west), int(eq_north), int(eq_pin), pins[j - 1]])
    return np.array(rows, dtype=np.int64).reshape(-1, _PROG_COLS)


def _count_bound(face: FaceDiagram, pins: list[int]) -> int:
    """Upper bound on any intermediate DP count: per column, the number of
    weakly decreasing tuples in the column's value range."""
    n = face.n
    bound = 1
    for j in range(2, n + 1):
        bound *= comb(pins[0] - pins[j - 1] + j - 1, j - 1)
    return bound


def _count_dense_numpy(prog: np.ndarray, pins: list[int], exact: bool) -> int:
    nslots = len(pins) - 1
    base = pins[0] + 1
    dtype = object if exact else np.int64
    state = np.zeros((base,) * nslots, dtype=dtype)
    state[tuple(pins[k] for k in range(nslots))] = 1

    def axis_index(ax: int) -> np.ndarray:
        shape = [1] * nslots
        shape[ax] = base
        return np.arange(base).reshape(shape)

    for slot, nslot, eq_west, eq_north, eq_pin, lb in prog.tolist():
        if eq_west:
            cur = state.copy()
        else:
            # cur[.., v, ..] = sum over west >= v of state
            cur = np.flip(np.cumsum(np.flip(state, slot), slot), slot)
        if nslot >= 0:
            vi, vn = axis_index(slot), axis_index(nslot)
            mask = (vi == vn) if eq_north else (vi <= vn)
            cur = cur * mask
        sl = [slice(None)] * nslots
        if eq_pin:
            sl[slot] = slice(0, lb)
            cur[tuple(sl)] = 0
            sl[slot] = slice(lb + 1, base)
            cur[tuple(sl)] = 0
        elif lb > 0:
            sl[slot] = slice(0, lb)
            cur[tuple(sl)] = 0
        state = cur
    return int(state.sum())


def _count_sparse_python(prog: np.ndarray, pins: list[int]) -> int:
    """Reference frontier DP with Python big integers."""
    nslots = len(pins) - 1
    cur = {tuple(pins[:nslots]): 1}
    for slot, nslot, eq_west, eq_north, eq_pin, lb in prog.tolist():
        nxt: dict[tuple[int, ...], int] = {}
        for key, cnt in cur.items():
            west = key[slot]
            hi = west if nslot < 0 else min(west, key[nslot])
            lo = lb
            if eq_west:
                lo, hi = max(lo, west), min(hi, west)
            if eq_north:
                north = key[nslot]
                lo, hi = max(lo, north), min(hi, north)
            if eq_pin:
                lo, hi = max(lo, lb), min(hi, lb)
            for v in range(lo, hi + 1):
                nk = key[:slot] + (v,) + key[slot + 1 :]
                nxt[nk] = nxt.get(nk, 0) + cnt
        cur = nxt
    return sum(cur.values())


_NUMBA_KERNELS = None


def _numba_kernels():
    global _NUMBA_KERNELS
    if _NUMBA_KERNELS is None:
        from numba import int64, njit
        from numba.typed import Dict

        @njit(cache=True)
        def count_face(prog, init, base):
            nslots = init.shape[0]
            powers = np.empty(nslots, dtype=np.int64)
            p = 1
            for k in range(nslots):
                powers[k] = p
                p *= base
            cur = Dict.empty(int64, int64)
            key0 = 0
            for k in range(nslots):
                key0 += init[k] * powers[k]
            cur[key0] = 1
            for c in range(prog.shape[0]):
                slot = prog[c, 0]
                nslot = prog[c, 1]
                eq_west = prog[c, 2]
                eq_north = prog[c, 3]
                eq_pin = prog[c, 4]
                lb = prog[c, 5]
                nxt = Dict.empty(int64, int64)
                for key, cnt in cur.items():
                    west = (key // powers[slot]) % base
                    hi = west
                    if nslot >= 0:
                        north = (key // powers[nslot]) % base
                        if north < hi:
                            hi = north
                    lo = lb
                    if eq_west:
                        if west > lo:
                            lo = west
                        if west < hi:
                            hi = west
                    if eq_north:
                        north = (key // powers[nslot]) % base
                        if north > lo:
                            lo = north
                        if north < hi:
                            hi = north
                    if eq_pin:
                        if lb > lo:
                            lo = lb
                        if lb < hi:
                            hi = lb
                    stripped = key - west * powers[slot]
                    for v in range(lo, hi + 1):
                        nk = stripped + v * powers[slot]
                        if nk in nxt:
                            nxt[nk] += cnt
                        else:
                            nxt[nk] = cnt
                cur = nxt
            total = 0
            for k, v in cur.items():
                total += v
            return total

        @njit(cache=True)
        def count_perm(mu, total):
            n = mu.shape[0]
            box = mu[0] + 1
            count = 0
            y = np.zeros(n, dtype=np.int64)
            srt = np.zeros(n, dtype=np.int64)
            idx = np.zeros(n - 1, dtype=np.int64)
            while True:
                s = 0
                for k in range(n - 1):
                    y[k] = idx[k]
                    s += idx[k]
                last = total - s
                if 0 <= last <= mu[0]:
                    y[n - 1] = last
                    for k in range(n):
                        srt[k] = y[k]
                    srt.sort()  # ascending; k largest live at the tail
                    ok = True
                    acc = 0
                    bound = 0
                    for k in range(1, n):
                        acc += srt[n - k]
                        bound += mu[k - 1]
                        if acc > bound:
                            ok = False
                            break
                    if ok:
                        count += 1
                pos = 0
                while pos < n - 1:
                    idx[pos] += 1
                    if idx[pos] < box:
                        break
                    idx[pos] = 0
                    pos += 1
                if pos == n - 1:
                    break
            return count

        _NUMBA_KERNELS = (count_face, count_perm)
    return _NUMBA_KERNELS


def _validate_lambda(lam) -> list[int]:
    lam = list(lam)
    if any(int(v) != v for v in lam):
        raise ValueError(f"lambda must be integral, got {lam}")
    lam = [int(v) for v in lam]
    if any(a <= b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"lambda must be strictly decreasing, got {lam}")
    return lam


def count_face_points(face: FaceDiagram, lam, t: int, backend: str | None = None) -> int:
    """Number of integer points of the face of ``GZ(t * lam)`` (one integer
    value per free component; components pinned through the diagonal keep the
    pinned value)."""
    lam = _validate_lambda(lam)
    if len(lam) != face.n:
        raise ValueError(f"lambda must have length n={face.n}")
    if face.is_empty:
        raise ValueError("cannot count points of an empty face")
    if t < 0:
        raise ValueError("dilation must be nonnegative")
    if backend is None:
        backend = default_backend()
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    pins = _scaled_pins(lam, t)
    prog = _face_program(face, pins)
    if face.n == 1:
        return 1
    exact_needed = _count_bound(face, pins) >= _INT64_SAFE
    if exact_needed:
        return _count_sparse_python(prog, pins)
    if backend == "numba":
        count_face, _ = _numba_kernels()
        init = np.array(pins[: face.n - 1], dtype=np.int64)
        return int(count_face(prog, init, pins[0] + 1))
    return _count_dense_numpy(prog, pins, exact=False)


def leading_ehrhart_coefficient(counts: list[int]) -> Fraction:
    """Leading coefficient of the degree-(len(counts)-1) polynomial with the
    given values at 0, 1, ..., via forward differences."""
    d = len(counts) - 1
    acc = 0
    for k, c in enumerate(counts):
        acc += (-1) ** (d - k) * comb(d, k) * c
    return Fraction(acc, factorial(d))


def ehrhart_volume_oracle(face: FaceDiagram, lam, backend: str | None = None) -> Fraction:
    """Relative volume of a face at integral ``lam``, measured independently
    of any tableau or product formula: count chart points of the dilates
    ``t = 0 .. dim F`` and take the normalized leading finite difference."""
    if face.is_empty:
        raise ValueError("empty face has no volume")
    d = face.dimension
    counts = [count_face_points(face, lam, t, backend=backend) for t in range(d + 1)]
    return leading_ehrhart_coefficient(counts)


def _perm_membership_counts_numpy(mu: list[int]) -> int:
    n = len(mu)
    total = sum(mu)
    box = mu[0] + 1
    if box ** (n - 1) > 50_000_000:
        raise MemoryError("dilate too large for the dense grid scan")
    grid = np.indices((box,) * (n - 1), dtype=np.int64).reshape(n - 1, -1).T
    last = total - grid.sum(axis=1)
    keep = (last >= 0) & (last <= mu[0])
    pts = np.concatenate([grid[keep], last[keep, None]], axis=1)
    srt = -np.sort(-pts, axis=1)
    prefixes = np.cumsum(srt, axis=1)[:, : n - 1]
    bounds = np.cumsum(np.array(mu, dtype=np.int64))[: n - 1]
    return int((prefixes <= bounds).all(axis=1).sum())


def count_permutohedron_points(lam, t: int, backend: str | None = None) -> int:
    """Integer points of ``t * Perm(lam)`` in the drop-last-coordinate chart:
    vectors with the prescribed total whose sorted prefixes are dominated by
    those of ``t * lam`` (majorization)."""
    lam = _validate_lambda(lam)
    if t < 0:
        raise ValueError("dilation must be nonnegative")
    if backend is None:
        backend = default_backend()
    mu = _scaled_pins(lam, t)
    if len(mu) == 1:
        return 1
    if backend == "numba":
        _, count_perm = _numba_kernels()
        return int(count_perm(np.array(mu, dtype=np.int64), sum(mu)))
    return _perm_membership_counts_numpy(mu)


def perm_volume_oracle(lam, backend: str | None = None) -> Fraction:
    """Relative volume of the permutohedron of an integral ``lam``."""
    lam = _validate_lambda(lam)
    d = len(lam) - 1
    counts = [count_permutohedron_points(lam, t, backend=backend) for t in range(d + 1)]
    return leading_ehrhart_coefficient(counts)
