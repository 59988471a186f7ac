"""Command-line front end: decompose, partition, verify, convert, oracle,
lower-bound generation/checking, and the bench report.

Exit codes: 0 success, 1 failed verification, 2 parse/config errors.
Artifacts go to stdout or --out; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .graphs import GraphFormatError, parse_graph, write_graph
from .lowerbound import (
    LowerBoundError,
    complete_tree_from_graph,
    gen_complete_tree,
)
from .lowerbound import check_lb_certificate
from .treedecomp import (
    TdFormatError,
    TdValidationError,
    heuristic_td,
    parse_td,
    validate_td,
    write_td,
)
from .treepartition import (
    ALPHA_PRESETS,
    AlphaParams,
    PartitionError,
    TpFormatError,
    exact_tpw,
    parse_tp,
    td_from_tp,
    tree_partition_with_stats,
    validate_tp,
    write_tp,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

DEFAULT_ORACLE_CAP = 9
DEFAULT_TREE_CAP = 10**6


def _cap(default: int) -> int:
    raw = os.environ.get("TREEPART_CAP")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise PartitionError(f"TREEPART_CAP must be an integer, got {raw!r}") from exc


def parse_alpha(text: str) -> Fraction:
    if text in ALPHA_PRESETS:
        return ALPHA_PRESETS[text]
    try:
        if "/" in text:
            p, q = text.split("/", 1)
            value = Fraction(int(p), int(q))
        else:
            value = Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise PartitionError(f"alpha must be 'int', 'opt', or p/q, got {text!r}") from exc
    if value <= 2:
        raise PartitionError(f"alpha must exceed 2, got {value}")
    return value


def _read(path: str) -> str:
    return Path(path).read_text()


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_graph(args: argparse.Namespace) -> "Graph":
    return parse_graph(_read(args.graph), fmt=args.format, strict=args.strict)


def cmd_decompose(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    td = heuristic_td(g, args.strategy)
    _emit(write_td(td, g.n), args.out)
    return EXIT_OK


def cmd_partition(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    if args.td:
        td = parse_td(_read(args.td))
    else:
        td = heuristic_td(g, args.strategy)
    alpha = parse_alpha(args.alpha)
    params = AlphaParams(alpha=alpha, k=validate_td(g, td) + 1, d=max(g.max_degree(), 1))
    tp, stats = tree_partition_with_stats(g, td, params)
    _emit(write_tp(tp, g.n), args.out)
    stats_path = args.stats
    if stats_path is None and args.out:
        stats_path = args.out + ".json"
    if stats_path:
        Path(stats_path).write_text(json.dumps(stats, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_verify_td(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    td = parse_td(_read(args.td))
    try:
        width = validate_td(g, td)
    except TdValidationError as exc:
        print(f"invalid: {exc}")
        return EXIT_FAIL
    print(f"valid width={width}")
    return EXIT_OK


def cmd_verify_tp(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    tp = parse_tp(_read(args.tp))
    st = validate_tp(g, tp)
    if not st.valid:
        print(f"invalid: {st.error}")
        return EXIT_FAIL
    print(f"valid width={st.width} tree_max_degree={st.max_tree_degree}")
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    cap = args.cap if args.cap is not None else _cap(DEFAULT_ORACLE_CAP)
    width, tp = exact_tpw(g, cap=cap)
    print(f"tpw={width}", file=sys.stderr)
    _emit(f"c tpw {width}\n" + write_tp(tp, g.n), args.out)
    return EXIT_OK


def cmd_convert(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    tp = parse_tp(_read(args.tp))
    try:
        td = td_from_tp(g, tp)
    except PartitionError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(write_td(td, g.n), args.out)
    return EXIT_OK


def cmd_lowerbound_gen(args: argparse.Namespace) -> int:
    x = gen_complete_tree(args.delta, args.depth, cap=_cap(DEFAULT_TREE_CAP))
    _emit(write_graph(x.graph), args.out)
    return EXIT_OK


def cmd_lowerbound_check(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph), fmt=args.format, strict=args.strict)
    x = complete_tree_from_graph(g)
    tp = parse_tp(_read(args.tp))
    try:
        verdict = check_lb_certificate(x, tp, args.alpha)
    except LowerBoundError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(verdict.to_json())
    ok = verdict.radius_ok and (not verdict.applicable or verdict.tree_size_ok)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_bench(args: argparse.Namespace) -> int:
    from . import report
    from .corpus import fixture_corpus

    if args.corpus == "spec":
        corpus = fixture_corpus()
    else:
        corpus_dir = Path(args.corpus)
        if not corpus_dir.is_dir():
            raise PartitionError(f"--corpus must be 'spec' or a directory, got {args.corpus!r}")
        corpus = [
            (p.stem, parse_graph(p.read_text(), fmt="pace-gr"))
            for p in sorted(corpus_dir.glob("*.gr"))
        ]
        if not corpus:
            raise PartitionError(f"no .gr files under {corpus_dir}")
    alphas = [(name, ALPHA_PRESETS[name]) for name in ("int", "opt")]
    rows = report.bench_rows(corpus, alphas)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / "bench.csv"
    report.write_csv(rows, csv_path)
    figures = report.render_figures(rows, out_dir)
    for p in (csv_path, *figures):
        print(p, file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treepart",
        description="Tree-partitions with bounded width and bounded-degree trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_arg(p: argparse.ArgumentParser) -> None:
        p.add_argument("graph", help="input graph file")
        p.add_argument("--format", choices=("pace-gr", "edge-list"), default="pace-gr")
        p.add_argument("--strict", action="store_true", help="reject duplicate edges and header drift")

    p = sub.add_parser("decompose", help="greedy tree decomposition -> .td")
    add_graph_arg(p)
    p.add_argument("--strategy", choices=("min-fill", "min-degree"), default="min-fill")
    p.add_argument("--out")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("partition", help="bounded-degree tree-partition -> .tp (+ JSON stats)")
    add_graph_arg(p)
    p.add_argument("--td", help="use this .td instead of the built-in heuristic")
    p.add_argument("--strategy", choices=("min-fill", "min-degree"), default="min-fill")
    p.add_argument("--alpha", default="int", help="'int' (4), 'opt' (239/70), or a rational p/q > 2")
    p.add_argument("--out", help=".tp destination (default stdout)")
    p.add_argument("--stats", help="JSON stats destination (default <out>.json when --out is set)")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("verify-td", help="validate a .td against its graph")
    add_graph_arg(p)
    p.add_argument("td")
    p.set_defaults(func=cmd_verify_td)

    p = sub.add_parser("verify-tp", help="validate a .tp against its graph")
    add_graph_arg(p)
    p.add_argument("tp")
    p.set_defaults(func=cmd_verify_tp)

    p = sub.add_parser("oracle", help="exact minimum tree-partition width (small graphs)")
    add_graph_arg(p)
    p.add_argument("--cap", type=int, help="vertex cap override (also TREEPART_CAP)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("convert", help="tree-partition to tree decomposition (width <= 2w-1)")
    add_graph_arg(p)
    p.add_argument("tp")
    p.add_argument("--out")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("lowerbound", help="extremal complete trees and certificate checks")
    lb_sub = p.add_subparsers(dest="lb_command", required=True)
    q = lb_sub.add_parser("gen", help="generate the complete tree X(delta, depth) -> .gr")
    q.add_argument("delta", type=int)
    q.add_argument("depth", type=int)
    q.add_argument("--out")
    q.set_defaults(func=cmd_lowerbound_gen)
    q = lb_sub.add_parser("check", help="check the radius/size/pigeonhole certificate")
    add_graph_arg(q)
    q.add_argument("tp")
    q.add_argument("--alpha", type=float, required=True, help="width exponent to report against")
    q.set_defaults(func=cmd_lowerbound_check)

    p = sub.add_parser("bench", help="width-vs-bound CSV and figures over a corpus")
    p.add_argument("--corpus", default="spec", help="'spec' (built-in) or a directory of .gr files")
    p.add_argument("--out-dir", default="bench_out")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        GraphFormatError,
        TdFormatError,
        TpFormatError,
        PartitionError,
        LowerBoundError,
        OSError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
