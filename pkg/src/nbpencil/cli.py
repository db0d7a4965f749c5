"""Command line interface: ``build``, ``verify`` and ``scan``.

Exit codes: 0 success, 1 verification mismatch, 2 precondition rejection,
3 I/O or format error.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .certificate import (CertificateFormatError, dumps, load, make_certificate, run_cell,
                          verify_certificate)
from .constructions import CONSTRUCTIONS, PreconditionError, build
from .gf import parse_field_spec, prime_power

EXIT_OK, EXIT_MISMATCH, EXIT_PRECONDITION, EXIT_IO = 0, 1, 2, 3

SCAN_BUDGET_ENV = "NBPENCIL_SCAN_BUDGET"
DEFAULT_SCAN_BUDGET = 1000


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_build(args):
    try:
        F = parse_field_spec(args.field)
        out = build(args.construction, F, args.d, args.n)
    except PreconditionError as exc:
        print(f"precondition rejected: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    cert = make_certificate(out, audit=args.audit)
    try:
        _write(dumps(cert), args.out)
    except OSError as exc:
        print(f"cannot write certificate: {exc}", file=sys.stderr)
        return EXIT_IO
    for rec in cert["members"]:
        print(f"[{rec['s']}:{rec['t']}]\t{rec['point_count']}\t{rec['status']}", file=sys.stderr)
    verdict = "holds" if cert["profile_holds"] else "FAILS"
    print(f"{out.pencil.label}: expected profile {out.expected_profile} {verdict}", file=sys.stderr)
    return EXIT_OK if cert["profile_holds"] else EXIT_MISMATCH


def cmd_verify(args):
    try:
        cert = load(args.path)
        problems = verify_certificate(cert)
    except CertificateFormatError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return EXIT_IO
    if problems:
        for p in problems:
            print(f"MISMATCH {p}")
        return EXIT_MISMATCH
    print(f"OK {args.path}: {len(cert['members'])} members re-derived")
    return EXIT_OK


def _parse_range(text):
    values = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            values.extend(range(int(lo), int(hi) + 1))
        elif part:
            values.append(int(part))
    return values


def parse_grid(spec):
    """``constructions=plane,fermat;q=2..5;d=2..5;n=3,4`` -> list of cells.

    q values that are not prime powers are dropped.  ``n`` only applies to
    highdim (default 3); the plane constructions always use n = 2.
    """
    fields = {}
    for item in spec.split(";"):
        if not item.strip():
            continue
        key, _, value = item.partition("=")
        fields[key.strip()] = value.strip()
    try:
        names = fields.pop("constructions", None) or fields.pop("construction")
        qs = _parse_range(fields.pop("q"))
        ds = _parse_range(fields.pop("d"))
        ns = _parse_range(fields.pop("n", "3"))
    except (KeyError, ValueError) as exc:
        raise ValueError(f"bad grid spec {spec!r}: {exc}") from None
    if fields:
        raise ValueError(f"unknown grid keys {sorted(fields)}")
    cells = []
    for name in [c.strip() for c in names.split(",")]:
        if name not in CONSTRUCTIONS:
            raise ValueError(f"unknown construction {name!r}")
        for q in qs:
            if prime_power(q) is None:
                continue
            for d in ds:
                for n in (ns if name == "highdim" else [2]):
                    cells.append((name, q, d, n))
    return cells


def _run(cell_and_audit):
    cell, audit = cell_and_audit
    return run_cell(*cell, audit=audit)


def cmd_scan(args):
    try:
        cells = parse_grid(args.grid)
    except ValueError as exc:
        print(exc, file=sys.stderr)
        return EXIT_PRECONDITION
    budget = int(os.environ.get(SCAN_BUDGET_ENV, DEFAULT_SCAN_BUDGET))
    if len(cells) > budget:
        print(f"grid has {len(cells)} cells, budget is {budget} (set {SCAN_BUDGET_ENV})", file=sys.stderr)
        return EXIT_PRECONDITION
    work = [(c, args.audit) for c in cells]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_run, work))
    else:
        rows = [_run(w) for w in work]
    report = {"grid": args.grid, "audit": args.audit, "cells": rows}
    bad = [r for r in rows if r["verdict"] == "counterexample"]
    report["counterexamples"] = len(bad)
    try:
        _write(json.dumps(report, indent=2) + "\n", args.out)
    except OSError as exc:
        print(f"cannot write report: {exc}", file=sys.stderr)
        return EXIT_IO
    for r in rows:
        print(f"{r['construction']}\tq={r['q']}\td={r['d']}\tn={r['n']}\t{r['verdict']}", file=sys.stderr)
    return EXIT_MISMATCH if bad else EXIT_OK


def make_parser():
    parser = argparse.ArgumentParser(prog="nbpencil", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build a pencil and write its certificate")
    b.add_argument("--construction", required=True, choices=CONSTRUCTIONS)
    b.add_argument("--field", required=True, help='"p^k" or a prime power "q"')
    b.add_argument("--d", type=int, required=True)
    b.add_argument("--n", type=int, default=None, help="dimension (highdim only)")
    b.add_argument("--audit", action=argparse.BooleanOptionalAction, default=True,
                   help="full line scan for every member (default on)")
    b.add_argument("--out", default="-")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="re-check a certificate")
    v.add_argument("path")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan", help="build and verify a parameter grid")
    s.add_argument("--grid", required=True,
                   help='e.g. "constructions=plane,fermat;q=2..9;d=2..7;n=3,4"')
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--audit", action=argparse.BooleanOptionalAction, default=False)
    s.add_argument("--out", default="-")
    s.set_defaults(func=cmd_scan)
    return parser


def main(argv=None):
    args = make_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
