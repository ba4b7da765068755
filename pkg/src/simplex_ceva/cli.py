"""Command-line front end.

Exit codes: 0 success / conditions consistent, 2 input error,
10 conditions (1) and (2) disagree (a falsification).
"""
from __future__ import annotations

import argparse
import sys

from . import campaign
from .concurrence import solve_membership, verify_equivalence
from .errors import CevaError, TheoremViolation
from .exact import BaryPoint, Face
from .instances import (DEFAULT_DENOMINATOR, concurrent_family, dumps, instance_to_json,
                        loads_instance, perturb_family, random_family, seeded_rng)
from .multipede import induce_multipede
from .render import render_svg

EXIT_OK, EXIT_INPUT, EXIT_FALSIFIED = 0, 2, 10


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise InputError(str(e)) from None


def _write(text: str, output: str | None):
    if output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as f:
            f.write(text)


def _parse_face(text: str, n: int) -> Face:
    try:
        return Face.of((int(s) for s in text.split(",") if s.strip()), n)
    except ValueError as e:
        raise InputError(f"bad face {text!r}: {e}") from None


def cmd_gen(args) -> int:
    n, k = args.n, args.k
    if n is None or k is None or n < 2 or not 1 <= k < n:
        raise InputError("gen needs --n >= 2 and 1 <= --k < n")
    if args.denominator_bound < 2:
        raise InputError("--denominator-bound must be >= 2")
    rng = seeded_rng(args.seed, n, k, args.mode)
    provenance = {"generator": "simplex-ceva gen", "mode": args.mode, "seed": args.seed,
                  "denominator_bound": args.denominator_bound}
    if args.mode == "random":
        fam = random_family(rng, n, k, args.denominator_bound)
    else:
        fam, x = concurrent_family(rng, n, k, args.denominator_bound)
        if args.mode == "concurrent":
            provenance["witness"] = x.to_strings()
        else:
            fam = perturb_family(rng, fam, args.denominator_bound)
    _write(dumps(instance_to_json(fam, provenance)), args.output)
    return EXIT_OK


def cmd_check(args) -> int:
    fam, _ = loads_instance(_read(args.file))
    if fam.uniform_k is None:
        raise InputError("check needs a uniform family; use 'intersect' for mixed families")
    try:
        report = verify_equivalence(fam)
    except TheoremViolation as e:
        doc = {"falsified": True, "reason": str(e), "intersects": e.intersects,
               "failing_faces": [list(f.indices) for f in e.failing_faces]}
        _write(dumps(doc), args.output)
        return EXIT_FALSIFIED
    _write(dumps(report.to_json()), args.output)
    return EXIT_OK


def cmd_intersect(args) -> int:
    fam, _ = loads_instance(_read(args.file))
    witness, boundary_only = solve_membership(fam)
    doc = {"witness": None if witness is None else witness.to_strings(), "boundary_only": boundary_only}
    _write(dumps(doc), args.output)
    return EXIT_OK


def multipede_to_json(mp) -> dict:
    return {
        "base": list(mp.base.indices),
        "points": [{"face": list(F.indices), "coords": mp.points[F].to_strings()}
                   for F in sorted(mp.points, key=lambda f: (-len(f), f.indices))],
    }


def cmd_induce(args) -> int:
    p = BaryPoint.parse(args.point)
    face = p.support if args.face is None else _parse_face(args.face, p.n)
    mp = induce_multipede(face, p)
    _write(dumps(multipede_to_json(mp)), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise InputError("--trials must be >= 1")
    try:
        ns = campaign.parse_range(args.n)
        list(campaign.cells(ns, args.k))
    except ValueError as e:
        raise InputError(str(e)) from None
    summary = campaign.run_campaign(ns, args.k, args.trials, args.seed, args.denominator_bound)
    _write(dumps(summary), args.output)
    return EXIT_FALSIFIED if summary["falsified"] else EXIT_OK


def cmd_render(args) -> int:
    fam, _ = loads_instance(_read(args.file))
    face = None if args.face is None else _parse_face(args.face, fam.ambient_n)
    witness, _ = solve_membership(fam)
    _write(render_svg(fam, face, witness), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simplex-ceva",
                                     description="Exact k-cevian concurrence in an n-simplex.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_output(p):
        p.add_argument("--output", "-o", default=None, help="write here instead of standard output")
        return p

    g = with_output(sub.add_parser("gen", help="generate a random instance"))
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--mode", choices=("concurrent", "perturbed", "random"), default="concurrent")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--denominator-bound", type=int, default=DEFAULT_DENOMINATOR)
    g.set_defaults(func=cmd_gen)

    c = with_output(sub.add_parser("check", help="decide both conditions and compare them"))
    c.add_argument("file", help="instance file, or - for standard input")
    c.set_defaults(func=cmd_check)

    i = with_output(sub.add_parser("intersect", help="common interior point of a (possibly mixed) family"))
    i.add_argument("file")
    i.set_defaults(func=cmd_intersect)

    m = with_output(sub.add_parser("induce", help="multipede induced by a point"))
    m.add_argument("point", help="ambient barycentric coordinates, e.g. 1/2,1/4,1/8,1/8")
    m.add_argument("--face", default=None, help="face indices, e.g. 0,1,2,3 (default: the point's support)")
    m.set_defaults(func=cmd_induce)

    v = with_output(sub.add_parser("verify", help="randomized equivalence campaign"))
    v.add_argument("--n", default="2..4", help="dimension or range lo..hi")
    v.add_argument("--k", default="all", help="'all' or a single cevian dimension")
    v.add_argument("--trials", type=int, default=50)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--denominator-bound", type=int, default=DEFAULT_DENOMINATOR)
    v.set_defaults(func=cmd_verify)

    r = with_output(sub.add_parser("render", help="SVG of one triangular face"))
    r.add_argument("file")
    r.add_argument("--face", default=None, help="three vertex indices (default 0,1,2)")
    r.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, CevaError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
