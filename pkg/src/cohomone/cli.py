"""Command line interface: ``cohomone <command> [options]``.

Exit codes: 0 on success or a surviving diagram, 1 when a diagram is
rejected or invalid, 2 for usage errors (bad flags or unparsable input).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, hitchin, obstruct, topology, weyl
from .diagram import validate
from .errors import CohomOneError, ParseError, UnknownEntry
from .grammar import parse
from .scan import SCAN_TYPES, scan

EXIT_OK, EXIT_REJECTED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, text: str, data) -> None:
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=False))
    else:
        print(text)


def _diagram(args):
    if not args.diagram:
        raise UsageError("--diagram is required")
    return parse(args.diagram)


def cmd_validate(args) -> int:
    d = _diagram(args)
    try:
        rep = validate(d)
    except CohomOneError as exc:
        _emit(args, f"invalid: {exc}", {"valid": False, "error": type(exc).__name__, "message": str(exc)})
        return EXIT_REJECTED
    text = (
        f"valid: l=({rep.l_minus},{rep.l_plus}), pi1 of order {rep.pi1_order}, "
        f"effective group {rep.effective_group}, Hbar = {rep.hbar}"
    )
    _emit(args, text, {"valid": True, **rep.to_json()})
    return EXIT_OK


def cmd_weyl(args) -> int:
    d = _diagram(args)
    validate(d)
    w = weyl.weyl_group(d)
    _emit(args, w.type, w.to_json())
    return EXIT_OK


def cmd_obstruct(args) -> int:
    d = _diagram(args)
    rep = obstruct.run_pipeline(d)
    _emit(args, rep.summary(), rep.to_json())
    return EXIT_OK if rep.survives else EXIT_REJECTED


def _slopes(text: str) -> tuple[int, int, int, int]:
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"--slopes must be four integers, got {text!r}") from exc
    if len(values) != 4:
        raise UsageError(f"--slopes must be four integers, got {text!r}")
    return values


def cmd_topology(args) -> int:
    if args.diagram:
        if args.family or args.slopes:
            raise UsageError("give either --diagram or --family with --slopes")
        inv = topology.invariants(_diagram(args))
    else:
        if not (args.family and args.slopes):
            raise UsageError("--family and --slopes are required without --diagram")
        inv = topology.family_invariants(args.family, *_slopes(args.slopes))
    _emit(args, inv.summary(), inv.to_json())
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.bound < 1:
        raise UsageError("--bound must be at least 1")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    types = [args.h_type] if args.h_type else list(SCAN_TYPES)
    reports = [scan(args.bound, t, jobs=args.jobs) for t in types]
    text = "\n".join(r.summary() for r in reports)
    data = [r.to_json(include_rejections=args.rejections) for r in reports]
    _emit(args, text, data[0] if len(data) == 1 else data)
    return EXIT_OK if not any(r.unmatched for r in reports) else EXIT_REJECTED


def cmd_hitchin(args) -> int:
    if args.k < 1:
        raise UsageError("--k must be positive")
    data = hitchin.report(args.k)
    # JSON is the native output here; the text form is a short digest
    if args.text:
        ids = data["identifications"]
        lines = [f"k = {args.k}"]
        for bundle in hitchin.BUNDLES:
            pairs = ", ".join(f"({p},{q})" for p, q in data[bundle])
            lines.append(f"  {bundle:13s} {{{pairs}}} -> {ids[bundle]['family'] or 'unrecognized'}")
        print("\n".join(lines))
    else:
        print(json.dumps(data, indent=2))
    return EXIT_OK


def cmd_lookup(args) -> int:
    entry = catalog.lookup(args.name, args.param)
    data = entry.to_json()
    text = f"{entry.label}: {data['diagram']}"
    if entry.note:
        text += f"\n  note: {entry.note}"
    exp = data["expected"]
    text += f"\n  expected l={tuple(exp['l'])}, Weyl {exp['weyl']}, H = {exp['H']}, Hbar = {exp['Hbar']}"
    _emit(args, text, data)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cohomone",
        description="Cohomogeneity one diagrams in S^3 x S^3: validation, Weyl groups, obstructions, topology.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, fn, help_text, diagram=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit JSON")
        if diagram:
            p.add_argument("--diagram", help='e.g. "K-=C(i,1,1)*H; K+=C(j,1,3)*H; H=gen{(i,i),(j,-j)}"')
        p.set_defaults(func=fn)
        return p

    add("validate", cmd_validate, "check a diagram and report its basic data", diagram=True)
    add("weyl", cmd_weyl, "Weyl group of a diagram", diagram=True)
    add("obstruct", cmd_obstruct, "run the obstruction pipeline", diagram=True)
    p = add("topology", cmd_topology, "cohomology of the P and N families", diagram=True)
    p.add_argument("--family", choices=("P", "N"))
    p.add_argument("--slopes", help="pm,qm,pp,qp")
    p = add("scan", cmd_scan, "enumerate candidates up to a slope bound")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--h-type", choices=SCAN_TYPES, help="default: all three")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--rejections", action="store_true", help="list every rejected candidate in JSON")
    p = sub.add_parser("hitchin", help="slopes of the Konishi bundles and their catalog match (JSON)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--text", action="store_true", help="short text digest instead of JSON")
    p.set_defaults(func=cmd_hitchin)
    p = add("lookup", cmd_lookup, "show a catalog entry")
    p.add_argument("name", help="S7, B7, W1, W2, E_p, P_k, Q_k or R")
    p.add_argument("param", type=int, nargs="?", help="family parameter")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, UnknownEntry) as exc:
        msg = exc.args[0] if isinstance(exc, UnknownEntry) else str(exc)
        print(f"{parser.prog} {args.command}: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except CohomOneError as exc:
        print(f"{parser.prog} {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_REJECTED


if __name__ == "__main__":
    sys.exit(main())
