"""Command-line front end.

Exit status: 0 on success, 1 when an analysis precondition fails (or a
verification finds a failure), 2 on malformed input.
"""
from __future__ import annotations

import argparse
import sys
from typing import TextIO

from . import verify as verify_mod
from .census import run_census
from .detectors import DetectionReport, PreconditionFailed, fill_in
from .graph import (
    Graph,
    GraphError,
    MalformedGraph,
    TerminalInSet,
    format_graph_text,
    is_connected,
    mask_of,
    parse_graph_text,
)
from .hexboard import HexBoard, annotate, to_graph
from .solver import MultiGame, Player, ShannonSolver

EXIT_OK, EXIT_PRECONDITION, EXIT_MALFORMED = 0, 1, 2

# --verify on detect: oracle checks only up to this many non-terminal vertices
VERIFY_CAP = 14

_PLAYERS = {"short": Player.SHORT, "cut": Player.CUT}


class UsageError(Exception):
    """Bad input that the parsers do not catch themselves."""


def _read(path: str | None, stdin: TextIO) -> str:
    if path is None or path == "-":
        return stdin.read()
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise MalformedGraph(f"cannot read {path}: {exc}") from None


def _shannon_graph(text: str) -> Graph:
    g = parse_graph_text(text)
    if len(g.terminal_list()) != 2:
        raise MalformedGraph("a Shannon game needs exactly two terminals")
    return g


def _parse_area(spec: str, g: Graph) -> int:
    try:
        vs = [int(x) for x in spec.split(",") if x.strip()]
    except ValueError:
        raise MalformedGraph(f"bad vertex list {spec!r}") from None
    if not vs or any(not 0 <= v < g.n for v in vs):
        raise MalformedGraph(f"area {spec!r} is empty or out of range")
    return mask_of(vs)


# -- subcommands ------------------------------------------------------------------

def cmd_solve(args, out: TextIO, stdin: TextIO) -> int:
    g = _shannon_graph(_read(args.input, stdin))
    mover = _PLAYERS[args.mover]
    s = ShannonSolver()
    w = s.winner(g, mover)
    print(w, file=out)
    if args.strategy:
        mv = s.winning_move(g, mover) if w is mover else None
        print(f"move {'-' if mv is None else mv}", file=out)
    return EXIT_OK


def cmd_multisolve(args, out: TextIO, stdin: TextIO) -> int:
    g = parse_graph_text(_read(args.input, stdin))
    area = _parse_area(args.area, g)
    m = MultiGame(g, area)
    res = m.outcome(_PLAYERS[args.first])
    print(res.value, file=out)
    if not is_connected(m.board):
        print("note: playing area and its neighbourhood are disconnected", file=out)
    return EXIT_OK


def _verify_report(rep: DetectionReport, out: TextIO) -> int:
    bad = 0
    for st in rep.steps:
        small = st.graph.nonterminals.bit_count() <= VERIFY_CAP
        for f in st.facts:
            if not small:
                verdict = "skipped"
            else:
                ok = verify_mod.confirm(st.graph, f)
                verdict = "skipped" if ok is None else ("pass" if ok else "FAIL")
            bad += verdict == "FAIL"
            print(f"verify {f.line()}: {verdict}", file=out)
    return bad


def cmd_detect(args, out: TextIO, stdin: TextIO) -> int:
    g = _shannon_graph(_read(args.input, stdin))
    rep = fill_in(g)
    out.write(rep.format())
    print("reduced", file=out)
    out.write(format_graph_text(rep.reduced))
    if args.verify and _verify_report(rep, out):
        return EXIT_PRECONDITION
    return EXIT_OK


def cmd_verify(args, out: TextIO, stdin: TextIO) -> int:
    only = args.suite or None
    if only:
        unknown = set(only) - set(verify_mod.SUITES)
        if unknown:
            raise UsageError(f"unknown suite(s): {', '.join(sorted(unknown))}")
    results = verify_mod.run_all(args.max_n, only)
    for r in results:
        print(r.line(), file=out)
        for msg in r.failures[:5]:
            print(f"  {msg}", file=out)
    return EXIT_OK if all(r.passed or r.skipped for r in results) else EXIT_PRECONDITION


def cmd_census(args, out: TextIO, stdin: TextIO) -> int:
    if args.input and args.input != "-":
        with open(args.input, encoding="ascii") as fh:
            row = run_census(fh, args.n, workers=args.workers)
    else:
        row = run_census(stdin, args.n, workers=args.workers)
    print(row.tsv(), file=out)
    return EXIT_OK


def cmd_hex(args, out: TextIO, stdin: TextIO) -> int:
    b = HexBoard.parse(_read(args.input, stdin))
    if args.annotate:
        marked, rep = annotate(b)
        out.write(marked.format())
        out.write(rep.format())
    if args.solve:
        print(ShannonSolver().winner(to_graph(b), _PLAYERS[args.mover]), file=out)
    return EXIT_OK


# -- entry point ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="shannon", description="Shannon game solver and analysis.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="winner of a Shannon game")
    s.add_argument("input", nargs="?", help="graph file (default: stdin)")
    s.add_argument("--mover", choices=_PLAYERS, default="short")
    s.add_argument("--strategy", action="store_true", help="also print a winning first move")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("multisolve", help="outcome of a multi-Shannon game")
    s.add_argument("input", nargs="?")
    s.add_argument("--area", required=True, help="comma-separated playing area")
    s.add_argument("--first", choices=_PLAYERS, default="short")
    s.set_defaults(func=cmd_multisolve)

    s = sub.add_parser("detect", help="fill-in report and reduced graph")
    s.add_argument("input", nargs="?")
    s.add_argument("--verify", action="store_true", help="check each fact with the oracles")
    s.set_defaults(func=cmd_detect)

    s = sub.add_parser("verify", help="exhaustive theorem checks on small graphs")
    s.add_argument("--max-n", type=int, default=6)
    s.add_argument("--suite", action="append", help="run only this suite (repeatable)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("census", help="property census of a graph6 stream")
    s.add_argument("input", nargs="?", help="graph6 file (default: stdin)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("hex", help="Hex board analysis")
    s.add_argument("input", nargs="?")
    s.add_argument("--annotate", action="store_true")
    s.add_argument("--solve", action="store_true")
    s.add_argument("--mover", choices=_PLAYERS, default="short")
    s.set_defaults(func=cmd_hex)
    return p


def main(argv: list[str] | None = None, out: TextIO | None = None,
         stdin: TextIO | None = None) -> int:
    out = out or sys.stdout
    stdin = stdin or sys.stdin
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code else EXIT_OK
    if args.command == "hex" and not (args.annotate or args.solve):
        print("error: hex needs --annotate or --solve", file=sys.stderr)
        return EXIT_MALFORMED
    try:
        return args.func(args, out, stdin)
    except (MalformedGraph, UsageError, UnicodeDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except (PreconditionFailed, TerminalInSet, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
