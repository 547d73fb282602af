"""Command-line interface.

Exit codes: 0 success, 1 a checked property fails (or the census has
unexplained survivors), 2 malformed input.  Every command writes plain
lines followed by one JSON summary line, so output is diff-stable.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .census import census, recognize
from .digraph import Digraph, empty, lex_product
from .errors import ChomogError
from .families import cp, directed_cycle, h, t2_ball, y
from .homogeneity import is_c_homogeneous, is_c_homogeneous_bipartite, is_homogeneous, two_coloring
from .quotients import (
    EXHAUSTIVE_MAX,
    SEARCH_BOUND,
    QuotientSpec,
    TriangleSystem,
    passes,
    search_quotients,
    spec_to_dict,
    verify_quotient,
)
from .reachability import classify_class, delta_shape_report, reachability_classes

log = logging.getLogger("chomog")

FAMILIES = {
    "cycle": (directed_cycle, 1),
    "cp": (cp, 1),
    "y": (y, 1),
    "h": (h, 0),
    "t2-ball": (lambda r: t2_ball(r).digraph, 1),
    "empty": (empty, 1),
}


class UsageError(Exception):
    pass


def _summary(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True))


def _load(path: str) -> Digraph:
    try:
        return Digraph.from_json(Path(path).read_text())
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read digraph from {path}: {exc}") from exc


def _perm(text: str) -> tuple[int, ...]:
    text = text.strip()
    try:
        if text.startswith("["):
            return tuple(int(x) for x in json.loads(text))
        return tuple(int(x) for x in text.split(","))
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad permutation {text!r}") from exc


def cmd_gen(args) -> int:
    fn, arity = FAMILIES[args.family]
    if len(args.params) != arity:
        raise UsageError(f"{args.family} takes {arity} integer parameter(s)")
    D = fn(*args.params)
    if args.compose_empty is not None:
        D = lex_product(D, empty(args.compose_empty))
    sys.stdout.write(D.to_dot() if args.dot else D.to_json() + "\n")
    return 0


def cmd_check(args) -> int:
    D = _load(args.path)
    if args.mode == "homogeneous":
        v = is_homogeneous(D, args.max_size)
    elif args.mode == "c-homogeneous":
        v = is_c_homogeneous(D, args.max_size)
    else:
        sides = list(_perm(args.sides)) if args.sides else two_coloring(D)
        if sides is None:
            raise UsageError("the underlying graph is not bipartite")
        v = is_c_homogeneous_bipartite(D, sides, args.max_size)
    print(v.describe())
    if v.witness is not None:
        print("witness: " + json.dumps([[a, b] for a, b in sorted(v.witness.items())]))
    _summary(v.to_dict())
    return 0 if v.holds else 1


def cmd_reach(args) -> int:
    D = _load(args.path)
    part = reachability_classes(D)
    report = delta_shape_report(D)
    for i, (cls, delta) in enumerate(zip(part.classes, part.digraphs)):
        print(f"class {i}: {len(cls)} edges, shape {classify_class(delta)}: {json.dumps([list(e) for e in cls])}")
        if args.dot_dir:
            out = Path(args.dot_dir)
            out.mkdir(parents=True, exist_ok=True)
            (out / f"class_{i}.dot").write_text(delta.to_dot(f"class_{i}"))
    print(f"shape: {report.shape}")
    _summary(
        {
            "classes": report.class_count,
            "universal": part.universal,
            "shape": str(report.shape),
            "uniform": report.uniform,
            "bipartite": report.bipartite,
        }
    )
    return 0


def cmd_quotient(args) -> int:
    if args.t is not None:
        if args.a is not None or args.b is not None:
            raise UsageError("give either --t or both --a and --b")
        spec = TriangleSystem(args.k, _perm(args.t))
    else:
        if args.a is None or args.b is None:
            raise UsageError("--a and --b are required without --t")
        spec = QuotientSpec(args.k, _perm(args.a), _perm(args.b))
    report = verify_quotient(spec)
    if not report["valid"]:
        print(f"invalid: {report['error']}: {report['message']}", file=sys.stderr)
        _summary(report)
        return 2
    print(f"c-homogeneous: {report['c_homogeneous']['holds']}")
    print(f"delta shape: {report['delta_shape']}")
    _summary(report)
    return 0 if passes(report) else 1


def cmd_quotient_search(args) -> int:
    found = search_quotients(args.max_k, args.labelled_only, args.exhaustive_max)
    rows = []
    for spec, report in found:
        print(f"k={spec.k} {report['delta_shape']} classes={report['delta_class_count']} {json.dumps(spec_to_dict(spec))}")
        rows.append(report)
    if args.out:
        Path(args.out).write_text(json.dumps(rows, indent=1) + "\n")
    _summary(
        {
            "max_k": args.max_k,
            "exhaustive_max": args.exhaustive_max,
            "labelled_only": args.labelled_only,
            "found": len(found),
            "shapes": sorted({r["delta_shape"] for r in rows}),
        }
    )
    return 0


def cmd_census(args) -> int:
    report = census(args.max_n, jobs=args.jobs)
    log.info("census runtime: %s", report.runtime)
    for D, entry in report.found:
        print(f"n={D.n} {entry}")
    for D in report.unexplained:
        print(f"unexplained: {D.to_json()}")
    for entry in report.missing:
        print(f"missing: {entry}")
    if args.out:
        Path(args.out).write_text(report.to_text(with_runtime=False))
    _summary({"max_n": args.max_n, "counts": report.counts, "unexplained": len(report.unexplained), "missing": len(report.missing)})
    return 0 if report.ok else 1


def cmd_classify(args) -> int:
    entry = recognize(_load(args.path))
    print(entry)
    _summary(entry.to_dict())
    return 1 if entry.tag == "Unknown" else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chomog", description="Connected-homogeneous digraph toolkit")
    p.add_argument("--jobs", type=int, default=1, help="maximum worker processes")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit a named digraph")
    g.add_argument("family", choices=sorted(FAMILIES))
    g.add_argument("params", nargs="*", type=int)
    g.add_argument("--compose-empty", type=int, metavar="N", help="blow up every vertex into N copies")
    g.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="test (connected-)homogeneity")
    c.add_argument("path")
    c.add_argument("--mode", choices=["homogeneous", "c-homogeneous", "c-bipartite"], default="c-homogeneous")
    c.add_argument("--max-size", type=int)
    c.add_argument("--sides", help="comma-separated 0/1 side per vertex (c-bipartite)")
    c.set_defaults(func=cmd_check)

    r = sub.add_parser("reach", help="reachability classes and their shape")
    r.add_argument("path")
    r.add_argument("--dot-dir", help="write one DOT file per class here")
    r.set_defaults(func=cmd_reach)

    q = sub.add_parser("quotient", help="verify one quotient of T(2)")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--a", help="image array of A")
    q.add_argument("--b", help="image array of B")
    q.add_argument("--t", help="image array of the dart permutation T")
    q.set_defaults(func=cmd_quotient)

    qs = sub.add_parser("quotient-search", help="search verified quotients of T(2)")
    qs.add_argument("--max-k", type=int, default=SEARCH_BOUND)
    qs.add_argument("--exhaustive-max", type=int, default=EXHAUSTIVE_MAX)
    qs.add_argument("--labelled-only", action="store_true", help="only pairs (A, B)")
    qs.add_argument("--out")
    qs.set_defaults(func=cmd_quotient_search)

    ce = sub.add_parser("census", help="exhaustive census of small C-homogeneous digraphs")
    ce.add_argument("--max-n", type=int, default=6)
    ce.add_argument("--out")
    ce.set_defaults(func=cmd_census)

    cl = sub.add_parser("classify", help="catalog entry of a connected digraph")
    cl.add_argument("path")
    cl.set_defaults(func=cmd_classify)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except (UsageError, ChomogError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
