"""Command-line front end: ``mlst {compress,decompress,stats,bench}``."""

from __future__ import annotations

import argparse
import gc
import sys
import time
from pathlib import Path

from .bitio import CorruptStreamError
from .codec import (DEFAULT_WINDOW_LOG, MAX_WINDOW_LOG, Strategy, compress,
                    decompress, parse_stats)
from .cost_model import CostModel
from .multilayer import MultiLayerSuffixTree
from .oracle import rmst_build_and_query


def _window_log(value: str) -> int:
    try:
        w = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}") from None
    if not 0 <= w <= MAX_WINDOW_LOG:
        raise argparse.ArgumentTypeError(f"window log must be in 0..{MAX_WINDOW_LOG}")
    return w


def _add_window(p: argparse.ArgumentParser, model: bool = True) -> None:
    p.add_argument("--window-log", type=_window_log, default=DEFAULT_WINDOW_LOG,
                   metavar="W", help="window size is 2**W (default %(default)s)")
    if model:
        p.add_argument("--model", choices=["gamma", "binary"], default="gamma",
                       help="offset cost model (default %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mlst", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compress", help="compress a file")
    p.add_argument("input", type=Path)
    p.add_argument("output", type=Path)
    _add_window(p)

    p = sub.add_parser("decompress", help="decompress a file")
    p.add_argument("input", type=Path)
    p.add_argument("output", type=Path)

    p = sub.add_parser("stats", help="offset bit totals under each strategy")
    p.add_argument("input", type=Path)
    _add_window(p)

    p = sub.add_parser("bench", help="time the multilayer index against the RMST baseline")
    p.add_argument("inputs", type=Path, nargs="+")
    _add_window(p, model=False)
    return parser


def cmd_compress(args) -> int:
    data = args.input.read_bytes()
    out = compress(data, window_log=args.window_log, model=args.model)
    args.output.write_bytes(out)
    ratio = len(out) / len(data) if data else float("inf")
    print(f"original={len(data)} compressed={len(out)} ratio={ratio:.4f}")
    return 0


def cmd_decompress(args) -> int:
    data = decompress(args.input.read_bytes())
    args.output.write_bytes(data)
    print(f"decompressed={len(data)}")
    return 0


def cmd_stats(args) -> int:
    data = args.input.read_bytes()
    st = parse_stats(data, window_log=args.window_log, model=args.model)
    print(f"bytes={st.length}")
    print(f"literals={st.literals}")
    print(f"matches={st.matches}")
    for strategy in Strategy:
        print(f"bill_{strategy.value}={st.bills[strategy]}")
    print(f"compressed={st.compressed_size}")
    return 0


def time_mlst(data: bytes, max_window: int) -> tuple[float, int]:
    """Seconds to push ``data`` through every layer, and the tree operation count."""
    idx = MultiLayerSuffixTree(CostModel.GAMMA, max_window)
    enabled = gc.isenabled()
    gc.disable()
    try:
        start = time.perf_counter()
        for b in data:
            idx.advance(b)
        elapsed = time.perf_counter() - start
    finally:
        if enabled:
            gc.enable()
    return elapsed, idx.tree_ops


def time_rmst(data: bytes, max_window: int) -> tuple[float, int]:
    enabled = gc.isenabled()
    gc.disable()
    try:
        report = rmst_build_and_query(data, max_window, query=False)
    finally:
        if enabled:
            gc.enable()
    return report.seconds, report.path_updates


def cmd_bench(args) -> int:
    window = 1 << args.window_log
    rows = []
    for path in args.inputs:
        data = path.read_bytes()
        n = max(len(data), 1)
        mlst_s, mlst_ops = time_mlst(data, window)
        rmst_s, rmst_updates = time_rmst(data, window)
        mlst_ns = 1e9 * mlst_s / n
        rmst_ns = 1e9 * rmst_s / n
        delta = mlst_ns / rmst_ns if rmst_ns > 0 else float("inf")
        rows.append((path.name, len(data), mlst_ns, rmst_ns, delta, mlst_ops, rmst_updates))
    print(f"{'input':<24}{'bytes':>10}{'MLST ns/B':>12}{'RMST ns/B':>12}{'delta':>8}"
          f"{'MLST ops':>12}{'RMST upd':>12}")
    for name, size, m, r, d, ops, upd in rows:
        print(f"{name:<24}{size:>10}{m:>12.1f}{r:>12.1f}{d:>8.2f}{ops:>12}{upd:>12}")
    for name, size, m, r, d, ops, upd in rows:
        print(f"input={name} bytes={size} mlst_ns_per_byte={m:.1f} rmst_ns_per_byte={r:.1f} "
              f"delta={d:.4f} mlst_tree_ops={ops} rmst_path_updates={upd}")
    return 0


COMMANDS = {
    "compress": cmd_compress,
    "decompress": cmd_decompress,
    "stats": cmd_stats,
    "bench": cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except CorruptStreamError as exc:
        print(f"mlst: corrupt stream: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"mlst: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
