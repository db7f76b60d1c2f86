"""Command-line interface: represent, triangles, verify, render."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .exact_core import cusp_class, is_prime
from .norm_solver import NormWitness, Ring, represent_eisenstein, represent_gaussian
from .render import render_svg
from .triangle_orbits import barycenter, enumerate_triangles, orbit_decomposition
from .verify import rows_to_csv, summary_to_json, verify_theorems

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_ABSENT = 2


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {n}")
    return n


def _prime(p: int) -> int:
    if not is_prime(p):
        raise UsageError(f"{p} is not prime")
    return p


def _odd_prime(p: int) -> int:
    _prime(p)
    if p == 2:
        raise UsageError("p must be an odd prime")
    return p


def _sq(n: int) -> str:
    return f"({n})²" if n < 0 else f"{n}²"


def _mul(a: int, b: int) -> str:
    return "·".join(f"({n})" if n < 0 else str(n) for n in (a, b))


def witness_json(w: NormWitness | None, p: int, ring: Ring) -> dict:
    if w is None:
        return {"p": p, "ring": ring.value, "witness": None, "certificate": None, "norm_check": False}
    return {
        "p": p,
        "ring": ring.value,
        "witness": list(w.pair),
        "certificate": {
            "k": w.k,
            "stabilizer": list(w.stabilizer.entries),
            "conjugator": list(w.conjugator.entries),
        },
        "norm_check": w.norm == p,
    }


def cmd_represent(args) -> int:
    p = _prime(args.p)
    ring = Ring(args.ring)
    if ring is Ring.EISENSTEIN:
        w = represent_eisenstein(p)
        if w is not None:
            a, b = w.pair
            line = f"{p} = N({w.value}) = {_sq(a)} − {_mul(a, b)} + {_sq(b)}"
        else:
            line = f"no representation ({p} ≡ {p % 3} mod 3)"
    else:
        w = represent_gaussian(p)
        if w is not None:
            c, d = w.pair
            line = f"{p} = N({w.value}) = {_sq(c)} + {_sq(d)}"
        else:
            line = f"no representation ({p} ≡ {p % 4} mod 4)"
    if args.json:
        print(json.dumps(witness_json(w, p, ring), sort_keys=True))
    else:
        print(line)
    return EXIT_OK if w is not None else EXIT_ABSENT


def cmd_triangles(args) -> int:
    p = _odd_prime(args.p)
    triangles = enumerate_triangles(p)
    rows = []
    if args.orbits:
        od = orbit_decomposition(p)
        orbit_of = {t: [t] for t in od.fixed}
        for cyc in od.three_cycles:
            for t in cyc:
                orbit_of[t] = list(cyc)
    for t in triangles:
        row = {
            "k": t.k,
            "vertices": [str(v) for v in t.vertices],
            "edge_lengths": list(t.edge_lengths()),
            "cusp_classes": [cusp_class(v).value for v in t.vertices],
        }
        if args.orbits:
            orbit = orbit_of[t]
            row["fixed"] = len(orbit) == 1
            row["orbit"] = [x.k for x in orbit]
            if row["fixed"]:
                bc = barycenter(t)
                row["barycenter"] = {"x": str(bc.x), "y": str(bc.y), "radicand": bc.d}
        rows.append(row)
    if args.json:
        print(json.dumps({"p": p, "triangles": rows}, sort_keys=True))
        return EXIT_OK
    for row in rows:
        line = (
            f"k={row['k']:<5} ({', '.join(row['vertices'])})  "
            f"λ={'/'.join(str(n) for n in row['edge_lengths'])}  "
            f"cusps={','.join(row['cusp_classes'])}"
        )
        if args.orbits:
            if row["fixed"]:
                b = row["barycenter"]
                line += f"  FIXED barycenter={b['x']} + {b['y']}·√3·i"
            else:
                line += f"  orbit={'->'.join(str(k) for k in row['orbit'])}"
        print(line)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max < 3:
        raise UsageError("--max must be at least 3")
    report = verify_theorems(args.max, jobs=args.jobs)
    out = Path(args.out)
    try:
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.csv").write_text(rows_to_csv(report.rows), encoding="utf-8")
        (out / "summary.json").write_text(summary_to_json(report), encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot write report to {out}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_USAGE
    n = len(report.results)
    status = "all checks passed" if report.all_passed else "FAILURES"
    print(f"verified {n} primes <= {args.max}: {status}; report in {out}")
    for res in report.results:
        for f in res.failures:
            print(f"  p={res.p}: {f}", file=sys.stderr)
    return EXIT_OK if report.all_passed else EXIT_USAGE


def cmd_render(args) -> int:
    p = _odd_prime(args.p)
    window = (Fraction(args.window[0]), Fraction(args.window[1])) if args.window else (Fraction(0), Fraction(2))
    try:
        svg = render_svg(p, window, args.den_limit)
    except ValueError as exc:
        raise UsageError(str(exc))
    try:
        Path(args.out).write_text(svg, encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lambda-norms",
        description="Eisenstein and Gaussian norms of primes from lambda-lengths on H/Gamma(2).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("represent", help="write a prime as a norm")
    rep.add_argument("p", type=_positive_int)
    rep.add_argument("--ring", choices=[r.value for r in Ring], default=Ring.EISENSTEIN.value)
    rep.add_argument("--json", action="store_true")
    rep.set_defaults(func=cmd_represent)

    tri = sub.add_parser("triangles", help="list equilateral triangles of lambda-length p")
    tri.add_argument("p", type=_positive_int)
    tri.add_argument("--orbits", action="store_true", help="group by psi-orbits")
    tri.add_argument("--json", action="store_true")
    tri.set_defaults(func=cmd_triangles)

    ver = sub.add_parser("verify", help="sweep all primes up to --max")
    ver.add_argument("--max", type=_positive_int, required=True)
    ver.add_argument("--out", default=".")
    ver.add_argument("--jobs", type=_positive_int, default=1)
    ver.set_defaults(func=cmd_verify)

    ren = sub.add_parser("render", help="write an SVG figure")
    ren.add_argument("p", type=_positive_int)
    ren.add_argument("--out", required=True)
    ren.add_argument("--window", nargs=2, type=_rational, metavar=("A", "B"))
    ren.add_argument("--den-limit", type=_positive_int, default=32)
    ren.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage; 2 is reserved for "provably absent"
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
