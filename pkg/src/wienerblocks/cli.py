"""Command-line front end: graph6 lines in, one JSON object per line out.

Exit status is 0 on success, 1 when a verification fails and 2 for usage
or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, Optional, TextIO

from .blocks import SubgraphKind, block_decomposition, blocks_tree, classify
from .families import (
    FamilyParams,
    closed_transmission_cycle,
    closed_transmission_path_end,
    closed_wiener_cycle,
    closed_wiener_path,
    cycle,
    path,
    spider,
    theta,
    two_cycles_path,
    two_cycles_wiener,
)
from .graph import (
    Graph,
    GraphError,
    eccentricity,
    graph6_decode,
    graph6_encode,
    is_connected,
    transmissions,
    wiener,
)
from .rewrites import hill_climb
from .search import (
    max_wiener_blocks,
    survey_hill_climb,
    verify_kdist,
    verify_main,
    verify_theta,
    verify_two_cycle_family,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"4..8"``, ``"5"`` or ``"3,5,7"`` to a sorted list of integers."""
    out: set[int] = set()
    try:
        for part in text.split(","):
            if ".." in part:
                lo, hi = part.split("..")
                lo_i, hi_i = int(lo), int(hi)
                if lo_i > hi_i:
                    raise UsageError(f"empty range {part!r}")
                out.update(range(lo_i, hi_i + 1))
            else:
                out.add(int(part))
    except ValueError:
        raise UsageError(f"bad integer range {text!r}") from None
    return sorted(out)


def _emit(out: TextIO, obj: dict) -> None:
    out.write(json.dumps(obj, separators=(", ", ": ")) + "\n")


def _read_graphs(stream: TextIO) -> Iterator[tuple[int, Graph]]:
    for lineno, line in enumerate(stream, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            g = graph6_decode(text)
        except GraphError as exc:
            raise UsageError(f"line {lineno}: {exc}") from None
        yield lineno, g


def _graph_stream(args, out: TextIO, handler) -> int:
    status = EXIT_OK
    stream = open(args.file) if args.file not in (None, "-") else sys.stdin
    try:
        for lineno, g in _read_graphs(stream):
            if not is_connected(g):
                _emit(out, {"line": lineno, "graph6": graph6_encode(g), "error": "graph is disconnected"})
                status = EXIT_USAGE
                continue
            _emit(out, handler(g))
    finally:
        if stream is not sys.stdin:
            stream.close()
    return status


def _wiener_row(g: Graph) -> dict:
    return {
        "graph6": graph6_encode(g),
        "n": g.n,
        "w": wiener(g),
        "transmissions": transmissions(g),
        "eccentricities": [eccentricity(g, v) for v in range(g.n)],
    }


def _blocks_row(g: Graph) -> dict:
    dec = block_decomposition(g)
    tree = blocks_tree(dec)
    blocks = []
    for i, b in enumerate(dec.blocks):
        kind = classify(dec, [i]).kind if dec.block_count > 1 else None
        blocks.append({
            "vertices": sorted(b.vertices),
            "edges": [list(e) for e in sorted(b.edges)],
            "kind": kind.value if isinstance(kind, SubgraphKind) else "whole",
            "cycle": b.is_cycle(),
        })
    return {
        "graph6": graph6_encode(g),
        "n": g.n,
        "p": dec.block_count,
        "cut_vertices": sorted(dec.cut_vertices),
        "blocks": blocks,
        "tree": {
            "block_nodes": list(tree.block_nodes),
            "cut_nodes": list(tree.cut_nodes),
            "edges": [list(e) for e in tree.edges],
        },
    }


def _climb_row(g: Graph) -> dict:
    fix, trace = hill_climb(g)
    return {
        "graph6": graph6_encode(g),
        "w": wiener(g),
        "fixpoint": graph6_encode(fix),
        "fixpoint_w": wiener(fix),
        "trace": [
            {"rule": r.rule, "delta_w": r.delta_w, "graph6": graph6_encode(r.after)}
            for r in trace
        ],
    }


def _need(args, *names: str) -> None:
    missing = [f"--{x}" for x in names if getattr(args, x) is None]
    if missing:
        raise UsageError(f"family {args.kind} needs {', '.join(missing)}")


def _family(args, out: TextIO) -> int:
    kind = args.kind
    extra: dict = {}
    if kind == "two-cycles":
        _need(args, "a", "b", "p")
        params = FamilyParams(args.a, args.b, args.p)
        g = two_cycles_path(params)
        desc = {"a": params.a, "b": params.b, "p": params.p}
        extra["w_composed"] = two_cycles_wiener(params)
    elif kind == "cycle":
        _need(args, "n")
        g = cycle(args.n)
        desc = {"n": args.n}
        cw, ct = closed_wiener_cycle(args.n), closed_transmission_cycle(args.n)
        # both are integers for every n >= 2
        extra.update(w_closed=int(cw), transmission_closed=int(ct))
    elif kind == "path":
        _need(args, "n")
        g = path(args.n)
        desc = {"n": args.n}
        extra.update(
            w_closed=closed_wiener_path(args.n),
            end_transmission_closed=closed_transmission_path_end(args.n),
        )
    elif kind == "spider":
        _need(args, "k", "t")
        g = spider(args.k, args.t)
        desc = {"k": args.k, "t": args.t}
    else:
        _need(args, "a", "b", "c")
        g = theta(args.a, args.b, args.c)
        desc = {"a": args.a, "b": args.b, "c": args.c}
    row = {"family": kind, "params": desc, "graph6": graph6_encode(g), "n": g.n, "w": wiener(g)}
    row.update(extra)
    _emit(out, row)
    return EXIT_OK


def _search(args, out: TextIO) -> int:
    ns = parse_range(args.n)
    if not all(2 <= n <= 10 for n in ns):
        raise UsageError("search supports 2 <= n <= 10")
    for n in ns:
        ps = parse_range(args.p) if args.p else list(range(1, n))
        for p in ps:
            if not 1 <= p < n:
                raise UsageError(f"p={p} outside 1..{n - 1} for n={n}")
        for p in ps:
            _emit(out, max_wiener_blocks(n, p, args.jobs).to_dict())
    return EXIT_OK


def _verify(args, out: TextIO) -> int:
    if not (args.main or args.two_cycle or args.kdist or args.theta or args.climb):
        raise UsageError("verify needs at least one of --main, --two-cycle, --kdist, --theta, --climb")
    ns = parse_range(args.n)
    checks = []
    if args.main:
        if not all(3 <= n <= 10 for n in ns):
            raise UsageError("--main supports 3 <= n <= 10")
        checks += [lambda n=n: verify_main(n, args.jobs) for n in ns]
    if args.two_cycle:
        if not all(5 <= n <= 40 for n in ns):
            raise UsageError("--two-cycle supports 5 <= n <= 40")
        checks += [lambda n=n: verify_two_cycle_family(n) for n in ns]
    if args.kdist:
        if not all(4 <= n <= 10 for n in ns):
            raise UsageError("--kdist supports 4 <= n <= 10")
        for n in ns:
            ks = parse_range(args.k) if args.k else list(range(3, n))
            if not all(3 <= k < n for k in ks):
                raise UsageError(f"--kdist needs 3 <= k < n (n={n})")
            checks += [lambda n=n, k=k: verify_kdist(n, k, args.jobs) for k in ks]
    if args.theta:
        if not all(4 <= n <= 10 for n in ns):
            raise UsageError("--theta supports 4 <= n <= 10")
        checks += [lambda n=n: verify_theta(n, args.jobs) for n in ns]
    if args.climb:
        if not all(1 <= n <= 10 for n in ns):
            raise UsageError("--climb supports 1 <= n <= 10")
        checks += [lambda n=n: survey_hill_climb(n, args.jobs) for n in ns]
    ok = True
    for run in checks:
        report = run()
        ok = ok and report.passed
        _emit(out, report.to_dict())
    _emit(out, {"check": "summary", "passed": ok, "reports": len(checks)})
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wienerblocks", description="Wiener index and block structure tools")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("wiener", "Wiener index, transmissions and eccentricities"),
        ("blocks", "block decomposition and blocks-tree"),
        ("climb", "hill-climb to a normalized fixpoint"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", nargs="?", help="graph6 file, one graph per line (default: stdin)")

    fam = sub.add_parser("family", help="build a named graph")
    fam.add_argument("--kind", choices=["two-cycles", "cycle", "path", "spider", "theta"], default="two-cycles")
    for flag in ("n", "a", "b", "c", "p", "k", "t"):
        fam.add_argument(f"--{flag}", type=int)

    srch = sub.add_parser("search", help="exhaustive maximum Wiener index for given n and p")
    srch.add_argument("--n", required=True)
    srch.add_argument("--p")
    srch.add_argument("--jobs", type=int, default=1)

    ver = sub.add_parser("verify", help="run exhaustive verifiers")
    ver.add_argument("--n", required=True)
    ver.add_argument("--k")
    ver.add_argument("--main", action="store_true")
    ver.add_argument("--two-cycle", action="store_true")
    ver.add_argument("--kdist", action="store_true")
    ver.add_argument("--theta", action="store_true")
    ver.add_argument("--climb", action="store_true")
    ver.add_argument("--jobs", type=int, default=1)
    return parser


def run(argv: Optional[list[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if getattr(args, "jobs", 1) < 1:
        err.write("error: --jobs must be positive\n")
        return EXIT_USAGE
    try:
        if args.command == "wiener":
            return _graph_stream(args, out, _wiener_row)
        if args.command == "blocks":
            return _graph_stream(args, out, _blocks_row)
        if args.command == "climb":
            return _graph_stream(args, out, _climb_row)
        if args.command == "family":
            return _family(args, out)
        if args.command == "search":
            return _search(args, out)
        return _verify(args, out)
    except (UsageError, GraphError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
