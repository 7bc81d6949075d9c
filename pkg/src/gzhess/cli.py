"""Command-line front end.

Subcommands: ``vol-gz``, ``vol-face``, ``vol-hess``, ``hess-class``,
``decompose-perm``, ``table``, ``check``.  Exit codes: 0 on success, 1 on a
usage error, 2 when a requested verification fails.  Output is byte-stable
for fixed flags and seed; ``--threads`` (or ``GZHESS_THREADS``) only shards
independent checks and never changes the output.
"""

import argparse
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import factorial

from . import lattice, poly
from .faces import (
    all_h_edges,
    all_v_edges,
    build_face,
    cube_face,
    cube_indices,
    format_face_spec,
    full_polytope,
    parse_face_spec,
)
from .perms import HessenbergFunction, all_hessenberg_functions
from .pipeline import (
    hess_class_schubert,
    hess_volume_derivative,
    hess_volume_faces,
    hess_volume_schubert,
    positivity_report,
)
from .permutohedron import (
    bruhat_extremes,
    richardson_class,
    richardson_decomposition_check,
    verify_cube,
)
from .schubert import vol_lambda_of_class
from .tableaux import (
    count_tableaux,
    face_volume,
    gz_volume_closed_form,
    is_relation_admissible,
    neighbor_volume_relation,
)

USAGE_ERROR = 1
VERIFICATION_FAILURE = 2

TABLE_EXPONENTS = [
    (3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1),
    (0, 3, 0), (0, 2, 1), (1, 0, 2), (0, 1, 2), (0, 0, 3),
]
TABLE1_ROWS = [(1, 1, 1), (2, 1, 1), (1, 2, 1), (3, 1, 1), (2, 2, 1), (3, 2, 1)]
TABLE2_ROWS = ["1,4,3,2", "2,3,4,1", "2,4,1,3", "3,1,4,2", "3,2,1,4", "4,1,2,3"]


class _Parser(argparse.ArgumentParser):
    """argparse exits with code 2 on bad usage; the contract here is 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _default_lambda(n: int) -> tuple[int, ...]:
    return tuple(range(n - 1, -1, -1))


def _parse_lambda(s: str) -> tuple[Fraction, ...]:
    return tuple(Fraction(tok) for tok in s.split(","))


def _fr(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _threads(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get("GZHESS_THREADS", "")
    return max(1, int(env)) if env.isdigit() and env else 1


def _run_cases(cases, threads: int):
    """Evaluate (label, fn) pairs, possibly sharded across a thread pool;
    results keep the submission order so output is independent of sharding."""
    if threads <= 1:
        return [(label, *fn()) for label, fn in cases]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(lambda c: c[1](), cases))
    return [(label, *res) for (label, _), res in zip(cases, results)]


def cmd_vol_gz(args) -> int:
    n = args.n
    lam = _parse_lambda(args.lam) if args.lam else None
    closed = gz_volume_closed_form(n)
    tableau_form = face_volume(full_polytope(n))
    check_ok = poly.to_alpha_basis(closed) == tableau_form if args.check else None

    if args.eval:
        point = lam if lam is not None else _default_lambda(n)
        if len(point) != n:
            raise ValueError(f"lambda must have {n} entries")
        value = poly.evaluate(closed, point)
        via_tableaux = poly.evaluate(tableau_form, poly.alpha_point(point))
        if value != via_tableaux:
            _emit("volume mismatch between closed form and tableau sum\n", None)
            return VERIFICATION_FAILURE
        if args.format == "json":
            _emit(json.dumps({"n": n, "lambda": [str(v) for v in point], "value": _fr(value)}) + "\n", args.output)
        else:
            _emit(f"{_fr(value)}\n", args.output)
        return 0

    shown = tableau_form if args.basis == "alpha" else closed
    if args.format == "json":
        payload = {"n": n, "volume": poly.to_json_dict(shown)}
        if args.check:
            payload["check"] = "ok" if check_ok else "mismatch"
        _emit(json.dumps(payload) + "\n", args.output)
    else:
        lines = [poly.render(shown)]
        if args.check:
            lines.append(f"closed form: {poly.render(closed)}")
            lines.append(f"check: {'ok' if check_ok else 'MISMATCH'}")
        _emit("\n".join(lines) + "\n", args.output)
    return 0 if check_ok in (None, True) else VERIFICATION_FAILURE


def cmd_vol_face(args) -> int:
    face = parse_face_spec(args.n, args.face)
    vol = face_volume(face)
    if face.is_empty:
        dim, tabs = None, 0
    else:
        dim, tabs = face.dimension, count_tableaux(face)
    if args.format == "json":
        payload = {
            "n": args.n,
            "face": format_face_spec(face),
            "empty": face.is_empty,
            "dimension": dim,
            "tableaux": tabs,
            "volume": poly.to_json_dict(vol),
        }
        _emit(json.dumps(payload) + "\n", args.output)
    else:
        lines = [
            f"face: {format_face_spec(face) or '(whole polytope)'}",
            f"dimension: {'empty' if face.is_empty else dim}",
            f"tableaux: {tabs}",
            f"volume: {poly.render(vol)}",
        ]
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_vol_hess(args) -> int:
    h = HessenbergFunction.from_string(args.h)
    methods = ["faces", "derivative", "schubert"] if args.method == "all" else [args.method]
    compute = {
        "faces": hess_volume_faces,
        "derivative": hess_volume_derivative,
        "schubert": hess_volume_schubert,
    }
    results = {m: compute[m](h) for m in methods}
    ok = len({tuple(sorted(v.terms.items())) for v in results.values()}) == 1
    if args.format == "json":
        payload = {"h": str(h), "volumes": {m: poly.to_json_dict(v) for m, v in results.items()}}
        if args.method == "all":
            payload["equal"] = ok
        _emit(json.dumps(payload) + "\n", args.output)
    else:
        lines = [f"{m}: {poly.render(v)}" for m, v in results.items()]
        if args.method == "all":
            lines.append(f"equal: {'true' if ok else 'FALSE'}")
        _emit("\n".join(lines) + "\n", args.output)
    return 0 if ok else VERIFICATION_FAILURE


def cmd_hess_class(args) -> int:
    h = HessenbergFunction.from_string(args.h)
    expansion = hess_class_schubert(h)
    payload = expansion.to_json_dict()
    if args.positivity:
        report = positivity_report(h)
        payload["positivity"] = {
            "dimension": h.dimension(),
            "coefficients": [
                {"w": str(w), "coeff": _fr(c)} for w, c in report.sorted_coefficients()
            ],
            "min_coefficient": _fr(report.min_coefficient),
            "all_strictly_positive": report.all_strictly_positive,
        }
    if args.format == "text":
        lines = [f"{w}: {_fr(c)}" for w, c in expansion.sorted_terms()]
        if args.positivity:
            report = positivity_report(h)
            lines.append(f"min coefficient: {_fr(report.min_coefficient)}")
            lines.append(f"all strictly positive: {'true' if report.all_strictly_positive else 'false'}")
        _emit("\n".join(lines) + "\n", args.output)
    else:
        _emit(json.dumps(payload) + "\n", args.output)
    return 0


def cmd_decompose_perm(args) -> int:
    n = args.n
    lam = _parse_lambda(args.lam) if args.lam else _default_lambda(n)
    if len(lam) != n:
        raise ValueError(f"lambda must have {n} entries")
    entries = []
    all_ok = True
    for r in cube_indices(n):
        face = cube_face(n, r)
        rmin, rmax = bruhat_extremes(n, r)
        rep = verify_cube(n, r, lam)
        all_ok = all_ok and rep.ok
        entries.append(
            {
                "r": list(r),
                "r_min": str(rmin),
                "r_max": str(rmax),
                "volume": poly.to_json_dict(face_volume(face)),
                "cube_ok": rep.ok,
            }
        )
    volume_ok = True
    if args.verify:
        total = sum(
            (poly.evaluate(face_volume(cube_face(n, r)), poly.alpha_point(lam)) for r in cube_indices(n)),
            Fraction(0),
        )
        oracle = lattice.perm_volume_oracle(lam)
        volume_ok = total == oracle
        all_ok = all_ok and volume_ok
    if args.format == "text":
        lines = []
        for e in entries:
            lines.append(
                f"r={tuple(e['r'])} r_min={e['r_min']} r_max={e['r_max']} "
                f"cube_ok={'true' if e['cube_ok'] else 'false'}"
            )
        if args.verify:
            lines.append(f"volume sum equals lattice oracle: {'true' if volume_ok else 'false'}")
        _emit("\n".join(lines) + "\n", args.output)
    else:
        _emit(json.dumps(entries) + "\n", args.output)
        if args.verify and not volume_ok:
            print("gzhess: volume sum does not match the lattice oracle", file=sys.stderr)
    return 0 if all_ok else VERIFICATION_FAILURE


def _normalized_coefficients(vol) -> dict[tuple[int, ...], int]:
    """Integer table entries: the volume coefficient of each exponent times
    the factorials of the exponent (tableau counts, so always integral)."""
    out = {}
    for exp, c in vol.terms.items():
        scale = 1
        for e in exp:
            scale *= factorial(e)
        value = c * scale
        assert value.denominator == 1
        out[exp] = value.numerator
    return out


def table_rows(which: int) -> list[tuple[str, dict[tuple[int, ...], int]]]:
    if which == 1:
        return [
            (f"F({r[0]}{r[1]}{r[2]})", _normalized_coefficients(face_volume(cube_face(4, r))))
            for r in TABLE1_ROWS
        ]
    if which == 2:
        from .perms import Permutation
        from .schubert import SchubertExpansion

        rows = []
        for wstr in TABLE2_ROWS:
            w = Permutation.from_string(wstr)
            e = SchubertExpansion(4, {w: Fraction(1)})
            vol = poly.to_alpha_basis(vol_lambda_of_class(e, 4))
            rows.append((wstr.replace(",", ""), _normalized_coefficients(vol)))
        perm_total = poly.zero(poly.ALPHA, 4)
        for r in cube_indices(4):
            perm_total = perm_total + face_volume(cube_face(4, r))
        rows.append(("Perm(lambda)", _normalized_coefficients(perm_total)))
        return rows
    raise ValueError("table number must be 1 or 2")


def render_table_csv(which: int) -> str:
    label = "face" if which == 1 else "permutation"
    header = label + "," + ",".join("".join(map(str, e)) for e in TABLE_EXPONENTS)
    lines = [header]
    for name, coeffs in table_rows(which):
        cells = [str(coeffs[e]) if e in coeffs else "" for e in TABLE_EXPONENTS]
        lines.append(name + "," + ",".join(cells))
    return "\n".join(lines) + "\n"


def cmd_table(args) -> int:
    _emit(render_table_csv(args.which), args.output)
    return 0


def _check_xrelation(n: int, seed: int):
    """Exhaustive four-neighbor relation sweep for n <= 4, else 200 seeded
    random admissible cases."""
    cases = []
    if n <= 4:
        from itertools import product as iproduct

        hs, vs = all_h_edges(n), all_v_edges(n)
        for hbits in iproduct((0, 1), repeat=len(hs)):
            for vbits in iproduct((0, 1), repeat=len(vs)):
                face = build_face(
                    n,
                    {e for e, b in zip(hs, hbits) if b},
                    {e for e, b in zip(vs, vbits) if b},
                )
                for cell in [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]:
                    if is_relation_admissible(face, cell):
                        cases.append((face, cell))
    else:
        rng = random.Random(seed)
        while len(cases) < 200:
            h = {e for e in all_h_edges(n) if rng.random() < 0.25}
            v = {e for e in all_v_edges(n) if rng.random() < 0.25}
            face = build_face(n, h, v)
            eligible = [
                c
                for c in [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
                if is_relation_admissible(face, c)
            ]
            if eligible:
                cases.append((face, rng.choice(eligible)))
    bad = 0
    for face, cell in cases:
        w, no, s, e = neighbor_volume_relation(face, cell)
        if w + no != s + e:
            bad += 1
    return bad == 0, f"{len(cases)} cases, {bad} failures"


def _check_ehrhart(n: int, seed: int):
    """Lattice-count oracle against the tableau volume formula on the cube
    faces (plus the worked n=4 face), and on random faces when n >= 5."""
    lam = _default_lambda(n)
    faces = [cube_face(n, r) for r in cube_indices(n)]
    if n == 4:
        faces.append(build_face(4, {(1, 1), (1, 2)}, {(3, 4)}))
    if n >= 5:
        rng = random.Random(seed)
        while len(faces) < len(cube_indices(n)) + 100:
            h = {e for e in all_h_edges(n) if rng.random() < 0.3}
            v = {e for e in all_v_edges(n) if rng.random() < 0.3}
            face = build_face(n, h, v)
            if not face.is_empty:
                faces.append(face)
    bad = 0
    for face in faces:
        oracle = lattice.ehrhart_volume_oracle(face, lam)
        formula = poly.evaluate(face_volume(face), poly.alpha_point(lam))
        if oracle != formula:
            bad += 1
    return bad == 0, f"{len(faces)} faces, {bad} failures"


def _check_cubes(n: int, seed: int):
    lam = _default_lambda(n)
    bad = [r for r in cube_indices(n) if not verify_cube(n, r, lam).ok]
    detail = f"{len(cube_indices(n))} cubes, {len(bad)} failures"
    ok = not bad
    if n <= 5:
        total = sum(
            (poly.evaluate(face_volume(cube_face(n, r)), poly.alpha_point(lam)) for r in cube_indices(n)),
            Fraction(0),
        )
        oracle = lattice.perm_volume_oracle(lam)
        ok = ok and total == oracle
        detail += f"; volume sum {_fr(total)} vs oracle {_fr(oracle)}"
    return ok, detail


def _check_threepath(n: int, seed: int, threads: int = 1):
    def one(h):
        def run():
            a = hess_volume_faces(h)
            b = hess_volume_derivative(h)
            c = hess_volume_schubert(h)
            ok = a == b == c and all(v > 0 for v in a.terms.values())
            return (ok,)

        return run

    cases = [(str(h), one(h)) for h in all_hessenberg_functions(n)]
    results = _run_cases(cases, threads)
    bad = [label for label, ok in results if not ok]
    return not bad, f"{len(cases)} functions, {len(bad)} failures"


def _check_richardson(n: int, seed: int):
    rep = richardson_decomposition_check(n)
    ok = rep.ok
    detail = f"class sum {'matches' if rep.ok else 'differs from'} the toric Hessenberg class"
    if n <= 4:
        vol_ok = all(
            poly.to_alpha_basis(vol_lambda_of_class(richardson_class(n, r), n))
            == face_volume(cube_face(n, r))
            for r in cube_indices(n)
        )
        ok = ok and vol_ok
        detail += f"; per-cube volumes {'match' if vol_ok else 'differ'}"
    return ok, detail


CHECK_SUITES = {
    "xrelation": _check_xrelation,
    "ehrhart": _check_ehrhart,
    "cubes": _check_cubes,
    "threepath": _check_threepath,
    "richardson": _check_richardson,
}


def cmd_check(args) -> int:
    suites = list(CHECK_SUITES) if args.suite == "all" else [args.suite]
    threads = _threads(args)
    lines = []
    all_ok = True
    for name in suites:
        fn = CHECK_SUITES[name]
        if name == "threepath":
            ok, detail = fn(args.n, args.seed, threads)
        else:
            ok, detail = fn(args.n, args.seed)
        all_ok = all_ok and ok
        lines.append(f"{'PASS' if ok else 'FAIL'} {name} (n={args.n}): {detail}")
    lines.append(f"summary: {'all checks passed' if all_ok else 'FAILURES PRESENT'}")
    _emit("\n".join(lines) + "\n", args.output)
    return 0 if all_ok else VERIFICATION_FAILURE


def build_parser() -> _Parser:
    parser = _Parser(prog="gzhess", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--output", help="write output to this path instead of stdout")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--threads", type=int, default=None)

    p = sub.add_parser("vol-gz", help="volume of the whole polytope")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--basis", choices=["alpha", "lambda"], default="alpha")
    p.add_argument("--lambda", dest="lam", help="comma-separated, e.g. 3,2,1,0")
    p.add_argument("--eval", action="store_true", help="evaluate at --lambda")
    p.add_argument("--check", action="store_true", help="verify closed form against tableau sum")
    common(p)
    p.set_defaults(func=cmd_vol_gz)

    p = sub.add_parser("vol-face", help="volume and tableau count of one face")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--face", required=True, help='e.g. "H(1,1);H(1,2);V(3,4)"')
    common(p)
    p.set_defaults(func=cmd_vol_face)

    p = sub.add_parser("vol-hess", help="volume polynomial of a Hessenberg variety")
    p.add_argument("--h", required=True, help="comma-separated values, e.g. 2,4,4,4")
    p.add_argument("--method", choices=["faces", "derivative", "schubert", "all"], default="all")
    common(p)
    p.set_defaults(func=cmd_vol_hess)

    p = sub.add_parser("hess-class", help="Schubert-basis expansion of the class")
    p.add_argument("--h", required=True)
    p.add_argument("--positivity", action="store_true")
    common(p)
    p.set_defaults(func=cmd_hess_class, format="json")

    p = sub.add_parser("decompose-perm", help="cube decomposition of the permutohedron")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--verify", action="store_true")
    common(p)
    p.set_defaults(func=cmd_decompose_perm, format="json")

    p = sub.add_parser("table", help="reproduce a summary table as CSV")
    p.add_argument("--which", type=int, choices=[1, 2], required=True)
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check", help="run a verification suite")
    p.add_argument("--suite", choices=list(CHECK_SUITES) + ["all"], default="all")
    p.add_argument("--n", type=int, default=4)
    common(p)
    p.set_defaults(func=cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"gzhess: error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
