"""``bt``: enumerate, map, tabulate and verify β(1,0)-trees.

Exit status: 0 on success, 1 when ``verify`` finds a failing property,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, Optional, TextIO

from . import core, labeled
from .enumeration import FamilySpec, generate
from .involution import h
from .stats import STAT_NAMES, dist_table, stats
from .verify import run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _to_json(t) -> dict:
    # iterative: trees may be deep
    def make(node, kids):
        obj = {"label": node.label}
        if isinstance(node, labeled.LabeledTree):
            obj["id"] = node.id
        obj["children"] = kids
        return obj

    return core._build(t, make)


def _read_trees(stream: TextIO, parse) -> Iterator:
    for lineno, line in enumerate(stream, 1):
        text = line.rstrip("\n")
        try:
            yield parse(text)
        except core.TreeError as exc:
            raise UsageError(f"line {lineno}: {exc}") from None


def cmd_enumerate(args, out: TextIO) -> int:
    try:
        spec = FamilySpec(args.nodes, args.root, args.indecomposable)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for t in generate(spec):
        if args.labeled:
            t = labeled.canonical_labeling(t)
        if args.format == "json":
            out.write(json.dumps(_to_json(t), separators=(",", ":")) + "\n")
        else:
            out.write(str(t) + "\n")
    return EXIT_OK


def cmd_map(args, inp: TextIO, out: TextIO) -> int:
    if args.labeled:
        for t in _read_trees(inp, labeled.parse):
            out.write(labeled.render(labeled.labeled_h(t)) + "\n")
    else:
        for t in _read_trees(inp, core.parse):
            out.write(core.render(h(t)) + "\n")
    return EXIT_OK


def cmd_stats(args, inp: TextIO, out: TextIO) -> int:
    parse = labeled.parse if args.labeled else core.parse
    out.write("\t".join(STAT_NAMES) + "\n")
    for t in _read_trees(inp, parse):
        if args.labeled:
            t = labeled.forget(t)
        out.write("\t".join(map(str, stats(t))) + "\n")
    return EXIT_OK


def cmd_words(args, inp: TextIO, out: TextIO) -> int:
    out.write("\t".join(labeled.WORD_COLUMNS) + "\n")
    for t in _read_trees(inp, labeled.parse):
        out.write(labeled.words_tsv_row(labeled.words(t)) + "\n")
    return EXIT_OK


def cmd_count(args, out: TextIO) -> int:
    names = [name for name in args.by.split(",") if name]
    unknown = [name for name in names if name not in STAT_NAMES]
    if unknown or not names:
        raise UsageError(f"unknown statistic(s): {', '.join(unknown) or '(none given)'}; choose from {', '.join(STAT_NAMES)}")
    try:
        family = generate(FamilySpec(args.nodes))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    table = dist_table(family, names)
    out.write(table.to_json() + "\n" if args.format == "json" else table.to_tsv())
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    if args.max_nodes < 2:
        raise UsageError("--max-nodes must be >= 2")
    if args.oracle_max < 1:
        raise UsageError("--oracle-max must be >= 1")

    def report(result):
        out.write(result.line() + "\n")
        out.flush()

    results = run_suites(args.max_nodes, args.oracle_max, on_result=report)
    failed = [r for r in results if not r.passed]
    out.write(f"{len(results) - len(failed)}/{len(results)} suites passed\n")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list every tree on N nodes in canonical order")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--root", type=int, default=None, help="keep only trees with this root label")
    p.add_argument("--indecomposable", action="store_true")
    p.add_argument("--labeled", action="store_true", help="attach preorder-position ids")
    p.add_argument("--format", choices=("sexp", "json"), default="sexp")

    p = sub.add_parser("map", help="apply the involution h to each stdin line")
    p.add_argument("--labeled", action="store_true")

    p = sub.add_parser("stats", help="scalar statistics of each stdin tree as TSV")
    p.add_argument("--labeled", action="store_true")

    sub.add_parser("words", help="word statistics of each labeled stdin tree as TSV")

    p = sub.add_parser("count", help="histogram of statistics over all trees on N nodes")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--by", required=True, help="comma-separated statistic names")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")

    p = sub.add_parser("verify", help="run the exhaustive property suites")
    p.add_argument("--max-nodes", type=int, required=True)
    p.add_argument("--oracle-max", type=int, default=6)
    return parser


def main(argv: Optional[list[str]] = None, stdin: TextIO = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "enumerate":
            return cmd_enumerate(args, stdout)
        if args.command == "map":
            return cmd_map(args, stdin, stdout)
        if args.command == "stats":
            return cmd_stats(args, stdin, stdout)
        if args.command == "words":
            return cmd_words(args, stdin, stdout)
        if args.command == "count":
            return cmd_count(args, stdout)
        return cmd_verify(args, stdout)
    except UsageError as exc:
        stderr.write(f"bt {args.command}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
