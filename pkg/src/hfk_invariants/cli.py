"""Command-line front end.

Exit codes: 0 success, 1 computation or input error, 2 golden-value mismatch.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Sequence

from . import corpus
from .cylinders import compose
from .errors import InvariantError
from .homology import homological_monodromy, homology_classes
from .invariants import alexander_polynomial, compute_report, fiberedness_report
from .io import format_report, format_verdict, load_presentation, report_to_dict, serialize_presentation, verdict_to_dict

EXIT_OK, EXIT_ERROR, EXIT_MISMATCH = 0, 1, 2

log = logging.getLogger("hfk_invariants")


def _worker_count(jobs: int) -> int:
    raw = os.environ.get("TORSION_THREADS")
    cap = os.cpu_count() or 1
    if raw:
        try:
            cap = max(1, int(raw))
        except ValueError:
            log.warning("ignoring non-integer TORSION_THREADS=%r", raw)
    return max(1, min(cap, jobs))


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_compute(args) -> int:
    r = compute_report(load_presentation(args.file))
    _emit(args, report_to_dict(r), format_report(r))
    return EXIT_OK


def cmd_fiberedness(args) -> int:
    p = load_presentation(args.file)
    v = fiberedness_report(p)
    _emit(args, {"name": p.name, **verdict_to_dict(v)}, format_verdict(v))
    return EXIT_OK


def cmd_alexander(args) -> int:
    p = load_presentation(args.file)
    alex = alexander_polynomial(homological_monodromy(homology_classes(p)))
    _emit(args, {"name": p.name, "alexander": list(alex.coefficients)}, str(alex))
    return EXIT_OK


def cmd_compose(args) -> int:
    a = load_presentation(args.file_a)
    b = load_presentation(args.file_b)
    product = compose(a, b, name=args.name)
    Path(args.output).write_text(serialize_presentation(product), encoding="utf-8")
    msg = (f"wrote {args.output}: genus {product.genus}, {product.internal_count} internal generators, "
           f"{len(product.relations)} relations")
    _emit(args, {"output": str(args.output), "genus": product.genus, "z_count": product.internal_count,
                 "relations": len(product.relations)}, msg)
    return EXIT_OK


def _check(name: str):
    res = corpus.check_entry(name)
    return name, res.passed, res.checks, res.report.torsion.normal.pretty()


def cmd_corpus(args) -> int:
    names = args.name or list(corpus.NAMES)
    for n in names:
        if n not in corpus.NAMES:
            raise InvariantError(f"unknown corpus entry {n!r}; choose from {', '.join(corpus.NAMES)}")
    workers = _worker_count(len(names))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check, names))
    else:
        results = [_check(n) for n in names]
    all_ok = all(ok for _, ok, _, _ in results)
    if args.json:
        print(json.dumps([
            {"name": n, "status": "PASS" if ok else "FAIL", "torsion_normal": normal,
             "checks": [{"check": label, "ok": good, "detail": detail} for label, good, detail in checks]}
            for n, ok, checks, normal in results], indent=2))
    else:
        for n, ok, checks, normal in results:
            print(f"{'PASS' if ok else 'FAIL'} {n}: torsion ~ {normal}")
            for label, good, detail in checks:
                if not good or args.verbose:
                    print(f"    {'ok ' if good else 'BAD'} {label}: {detail}")
        passed = sum(ok for _, ok, _, _ in results)
        print(f"{passed}/{len(results)} entries match")
    return EXIT_OK if all_ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hfk-invariants",
        description="Metabelian Alexander invariants of homologically fibered knots.")
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
        p.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)
        p.set_defaults(func=func)
        return p

    add("compute", cmd_compute, "all invariants of a presentation file").add_argument("file")
    add("fiberedness", cmd_fiberedness, "fibering-obstruction verdict").add_argument("file")
    add("alexander", cmd_alexander, "Alexander polynomial det(I - t sigma)").add_argument("file")
    c = add("compose", cmd_compose, "stack two homology cylinders")
    c.add_argument("file_a")
    c.add_argument("file_b")
    c.add_argument("-o", "--output", required=True)
    c.add_argument("--name")
    k = add("corpus", cmd_corpus, "check the embedded examples against their published values")
    k.add_argument("--name", action="append", help="entry to check (repeatable); default all")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (InvariantError, ArithmeticError, ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_ERROR


def main() -> None:
    sys.exit(run())
