"""Command-line front end: ``chordslide basis|periods|verify|identity``."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cyclo import DEFAULT_PRECISION
from .homology import CurveSpec, intersection_matrix, symplectic_basis
from .linalg import congruence
from .periods import (period_matrix_closed_form, period_matrix_direct,
                      schindler_tau)
from .verify import cross_check, cyclotomic_product_identity

PRECISION_ENV = "CHORDSLIDE_PRECISION"


class UsageError(Exception):
    pass


def _default_precision() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if raw is None:
        return DEFAULT_PRECISION
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{PRECISION_ENV} must be an integer, got {raw!r}") from None


def _spec(p, l, m) -> CurveSpec:
    try:
        return CurveSpec(p, l, m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_basis(args) -> int:
    spec = _spec(args.p, args.l, args.m)
    method = args.method or ("cq1" if spec.is_hyperelliptic else "klein" if spec.is_klein else "generic")
    try:
        t, record = symplectic_basis(spec, method)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    a = intersection_matrix(spec)
    out = {
        "spec": spec.to_json(),
        "method": method,
        "A": a.int_rows(),
        "T": t.int_rows(),
        "TAT": congruence(t, a).int_rows(),
        "slides": record.to_json() if record else [],
    }
    if args.format == "json":
        print(json.dumps(out, ensure_ascii=False))
    else:
        for key in ("A", "T", "TAT"):
            print(f"{key} =")
            for row in out[key]:
                print("  " + " ".join(f"{x:3d}" for x in row))
        if out["slides"]:
            print("slides:", ", ".join(f"{s['move']} along {s['along']} ({s['position']})"
                                      for s in out["slides"]))
    return 0


def cmd_periods(args) -> int:
    basis = args.basis.replace("-", "_")
    construction = args.construction.replace("-", "_")
    if basis == "klein":
        spec = _spec(args.q, 1, 2)
        if not spec.is_klein:
            raise UsageError("--basis klein requires --q 7")
    else:
        spec = _spec(args.q, 1, 1)
    g = spec.genus
    if construction == "direct":
        res = period_matrix_direct(spec, basis)
    elif construction == "closed_form":
        if basis != "natural":
            raise UsageError("--construction closed-form requires --basis natural")
        res = period_matrix_closed_form(g)
    elif construction == "recurrence":
        if basis != "schindler":
            raise UsageError("--construction recurrence requires --basis schindler")
        res = schindler_tau(g)
    else:
        raise UsageError(f"unknown construction {args.construction!r}")

    if args.format == "json":
        print(json.dumps(res.to_json(args.numeric)))
    elif args.format == "latex":
        print(res.to_latex())
    else:
        print(res.to_text())
        if args.numeric:
            for i, row in enumerate(res.numeric(args.numeric), 1):
                print(f"row {i}: " + "  ".join(f"{complex(z):.12g}" for z in row))
    return 0


def cmd_verify(args) -> int:
    if args.g < 2:
        raise UsageError("--g must be at least 2")
    precision = args.precision or _default_precision()
    report = cross_check(args.g, precision)
    print(json.dumps(report, indent=2))
    return 0 if report["pass"] else 1


def cmd_identity(args) -> int:
    if args.q < 5 or args.q % 2 == 0:
        raise UsageError("--q must be odd and >= 5")
    ok = cyclotomic_product_identity(args.q)
    print(json.dumps({"q": args.q, "identity": "prod(1 - zeta^l, l=1..q-1) == q", "pass": ok}))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chordslide", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("basis", help="symplectic basis of H_1(X_{p,l,m})")
    b.add_argument("--p", type=int, required=True)
    b.add_argument("--l", type=int, default=1)
    b.add_argument("--m", type=int, default=1)
    b.add_argument("--method", choices=["cq1", "klein", "generic"])
    b.add_argument("--format", choices=["json", "text"], default="json")
    b.set_defaults(func=cmd_basis)

    p = sub.add_parser("periods", help="period matrix of C_{q,1} or C_{7,2}")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--basis", required=True,
                   choices=["natural", "chord-slide", "schindler", "klein"])
    p.add_argument("--construction", default="direct",
                   choices=["direct", "closed-form", "recurrence"])
    p.add_argument("--format", choices=["json", "latex", "text"], default="text")
    p.add_argument("--numeric", type=int, metavar="BITS")
    p.set_defaults(func=cmd_periods)

    v = sub.add_parser("verify", help="cross-check every identity for genus g")
    v.add_argument("--g", type=int, required=True)
    v.add_argument("--precision", type=int, metavar="BITS")
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("identity", help="check prod(1 - zeta^l) = q")
    i.add_argument("--q", type=int, required=True)
    i.set_defaults(func=cmd_identity)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "numeric", None) is not None and args.numeric < 53:
            raise UsageError("--numeric must be at least 53 bits")
        if getattr(args, "precision", None) is not None and args.precision < 53:
            raise UsageError("--precision must be at least 53 bits")
        return args.func(args)
    except UsageError as exc:
        print(f"chordslide: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
