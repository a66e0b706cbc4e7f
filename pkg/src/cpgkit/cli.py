"""Command-line front end.

Exit status: 0 success, 1 domain failure (violations, failed audit, no
representation found, Euler check failed), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import formats
from .audit import VertexSetMismatch, audit_gk, format_report
from .contact import validate
from .gk import build_representation, euler_characteristic, generate_gk, rotation_system_gk, trace_faces
from .render import RenderOptions, render
from .search import (
    DEFAULT_NODE_BUDGET,
    AbortedBudget,
    ExhaustedNoSolution,
    Found,
    SearchBounds,
    search_representation,
)


class UsageError(Exception):
    pass


def _err(msg: str) -> None:
    color = sys.stderr.isatty() and os.environ.get("CPG_COLOR", "1") != "0"
    prefix = "\033[31merror:\033[0m" if color else "error:"
    print(f"{prefix} {msg}", file=sys.stderr)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _non_negative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _positive(text: str) -> int:
    v = _non_negative(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def cmd_gen_graph(args) -> int:
    _write(formats.dump_graph(generate_gk(args.k)), args.out)
    return 0


def cmd_build_rep(args) -> int:
    _write(formats.dump_rep(build_representation(args.k)), args.out)
    return 0


def cmd_validate(args) -> int:
    rep = formats.load_rep(_read(args.rep))
    violations = validate(rep)
    for v in violations:
        print(v)
    print(f"violations: {len(violations)}")
    return 1 if violations else 0


def cmd_audit(args) -> int:
    rep = formats.load_rep(_read(args.rep))
    try:
        report = audit_gk(rep, args.k)
    except VertexSetMismatch as exc:
        _err(str(exc))
        return 1
    sys.stdout.write(format_report(report))
    return 0 if report.all_ok else 1


def cmd_render(args) -> int:
    rep = formats.load_rep(_read(args.rep))
    try:
        opts = RenderOptions(
            format=args.format, cell_size=args.cell_size, endpoint_markers=not args.no_markers
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write(render(rep, opts), args.out)
    return 0


def cmd_search(args) -> int:
    graph = formats.load_graph(_read(args.graph))
    bounds = SearchBounds(args.width, args.height, args.bends, args.max_edge_len)
    outcome = search_representation(graph, bounds, args.nodes, workers=args.workers)
    # the status line goes to stderr so the witness on stdout can be piped
    if isinstance(outcome, Found):
        print("found", file=sys.stderr)
        _write(formats.dump_rep(outcome.rep), args.out)
        return 0
    if isinstance(outcome, ExhaustedNoSolution):
        print("exhausted: no representation within bounds", file=sys.stderr)
    elif isinstance(outcome, AbortedBudget):
        print(f"aborted: node budget {outcome.nodes} reached", file=sys.stderr)
    return 1


def cmd_faces(args) -> int:
    g = generate_gk(args.k)
    f = trace_faces(g, rotation_system_gk(args.k))
    chi = euler_characteristic(g, f)
    verdict = "Euler OK" if chi == 2 else "Euler FAILED"
    print(f"V={len(g.vertices)} E={len(g.edges)} F={f} V-E+F={chi} {verdict}")
    return 0 if chi == 2 else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cpgkit", description="Contact representations of paths on a grid.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen-graph", help="write the graph G_k")
    s.add_argument("--k", type=_non_negative, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_gen_graph)

    s = sub.add_parser("build-rep", help="write the canonical (k+1)-bend representation of G_k")
    s.add_argument("--k", type=_non_negative, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_build_rep)

    s = sub.add_parser("validate", help="list interior-disjointness and bounds violations")
    s.add_argument("--rep", required=True, help="representation file, or - for stdin")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("audit", help="check the structural claims on a representation of G_k")
    s.add_argument("--rep", required=True)
    s.add_argument("--k", type=_non_negative, required=True)
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("render", help="draw a representation")
    s.add_argument("--rep", required=True)
    s.add_argument("--format", choices=("svg", "ascii"), default="svg")
    s.add_argument("--cell-size", type=_positive, default=20)
    s.add_argument("--no-markers", action="store_true", help="omit endpoint arrowheads")
    s.add_argument("--out")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("search", help="bounded search for a representation of a small graph")
    s.add_argument("--graph", required=True)
    s.add_argument("--width", type=_positive, required=True, help="grid points per row")
    s.add_argument("--height", type=_positive, required=True, help="grid points per column")
    s.add_argument("--bends", type=_non_negative, required=True)
    s.add_argument("--max-edge-len", type=_positive)
    s.add_argument("--nodes", type=_positive, default=DEFAULT_NODE_BUDGET)
    s.add_argument("--workers", type=_positive, default=1)
    s.add_argument("--out", help="write the witness here instead of stdout")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("faces", help="face count of the planar embedding of G_k")
    s.add_argument("--k", type=_non_negative, required=True)
    s.set_defaults(func=cmd_faces)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (formats.FormatError, UsageError) as exc:
        _err(str(exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
