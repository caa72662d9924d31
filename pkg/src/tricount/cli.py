"""Command-line entry point: count, compare, generate, bench-backends.

Wires the loaders, reorderers, kernels, and metrics into reproducible runs.
Exit codes: 0 on success, 1 on input/usage errors, 2 when an internal
consistency check (kernel disagreement, counter identity) fails.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import counting, generate
from .counting import CountReport, KernelChoice
from .graph import (
    CsrGraph,
    EdgeList,
    GraphInputError,
    ValidationError,
    apply_permutation,
    canonicalize,
    load_edge_list,
    load_matrix_market,
)
from .kernels import ConsistencyError, available_backends
from .metrics import MetricsError, derive_metrics, emit_records, untimed_record
from .reorder import SortOrder, make_permutation

_ORDERS = tuple(o.value for o in SortOrder)
_KERNELS = tuple(k.value for k in KernelChoice)
_GENERATE_KINDS = ("gnp", "complete", "star", "path", "interleaved-fixture")


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit 1 (2 is reserved for internal
    consistency failures)."""

    def error(self, message: str):  # noqa: ANN201 - argparse contract
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_io_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="path to the graph file")
    p.add_argument(
        "--format",
        choices=("auto", "tsv", "mtx"),
        default="auto",
        help="input format; auto resolves .mtx to mtx, anything else to tsv",
    )
    p.add_argument(
        "--output",
        choices=("csv", "json-lines"),
        default="csv",
        help="record output format (written to stdout)",
    )
    p.add_argument("--cpu-ghz", type=float, default=None, help="nominal frequency for checks/cycle")
    p.add_argument("--n1", type=float, default=None, help="single-edge reference rate for the beta exponent")
    p.add_argument(
        "--no-timing",
        action="store_true",
        help="skip benchmarking; zero wall_time and omit rates (deterministic output)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tricount", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p_count = sub.add_parser("count", help="count triangles in one graph with one kernel")
    _add_io_flags(p_count)
    p_count.add_argument("--order", choices=_ORDERS, default="original", help="vertex relabeling before counting")
    p_count.add_argument("--kernel", choices=_KERNELS, default="scalar")
    p_count.set_defaults(func=cmd_count)

    p_compare = sub.add_parser(
        "compare",
        help="run all order x kernel combinations on one graph and report speedups",
    )
    _add_io_flags(p_compare)
    p_compare.set_defaults(func=cmd_compare)

    p_gen = sub.add_parser("generate", help="emit a generated graph as edge-list text")
    p_gen.add_argument("kind", choices=_GENERATE_KINDS)
    p_gen.add_argument("--n", type=int, default=None, help="vertex count (all kinds except interleaved-fixture)")
    p_gen.add_argument("--p", type=float, default=None, help="edge probability (gnp only)")
    p_gen.add_argument("--seed", type=int, default=0, help="RNG seed (gnp only)")
    p_gen.set_defaults(func=cmd_generate)

    p_bench = sub.add_parser(
        "bench-backends",
        help="time every available kernel backend on one graph",
    )
    p_bench.add_argument("--input", default=None, help="graph file; omitted = a seeded random graph")
    p_bench.add_argument("--format", choices=("auto", "tsv", "mtx"), default="auto")
    p_bench.add_argument("--n", type=int, default=1500, help="vertices for the generated graph")
    p_bench.add_argument("--p", type=float, default=0.02, help="edge probability for the generated graph")
    p_bench.add_argument("--seed", type=int, default=1)
    p_bench.set_defaults(func=cmd_bench_backends)

    return parser


def _load_graph(path: str, fmt: str) -> CsrGraph:
    """Load, canonicalize, and report any dropped raw edges on stderr."""
    p = Path(path)
    if fmt == "auto":
        fmt = "mtx" if p.suffix.lower() == ".mtx" else "tsv"
    with open(p, "r", encoding="utf-8") as fh:
        el = load_matrix_market(fh) if fmt == "mtx" else load_edge_list(fh)
    g = canonicalize(el)
    dropped = len(el) - g.num_edges
    if dropped > 0:
        print(
            f"note: dropped {dropped} self-loop/duplicate edge(s) of {len(el)} read",
            file=sys.stderr,
        )
    return g


def _apply_order(g: CsrGraph, order: SortOrder) -> CsrGraph:
    if order is SortOrder.ORIGINAL:
        return g
    return apply_permutation(g, make_permutation(g, order))


def _run(g: CsrGraph, kernel: KernelChoice, args, *, graph_label: str, order_label: str) -> CountReport:
    if args.no_timing:
        return counting.count_triangles(
            g, kernel, graph_label=graph_label, order_label=order_label
        )
    return counting.measure_count(
        g, kernel, graph_label=graph_label, order_label=order_label
    )


def _to_record(r: CountReport, g: CsrGraph, args, baseline: CountReport | None = None):
    if args.no_timing:
        return untimed_record(r, g.num_vertices, g.num_edges)
    return derive_metrics(
        r,
        g.num_vertices,
        g.num_edges,
        cpu_ghz=args.cpu_ghz,
        baseline=baseline,
        n1=args.n1,
    )


def cmd_count(args) -> int:
    g = _load_graph(args.input, args.format)
    order = SortOrder(args.order)
    g = _apply_order(g, order)
    kernel = KernelChoice(args.kernel)
    label = Path(args.input).name
    r = _run(g, kernel, args, graph_label=label, order_label=order.value)
    emit_records([_to_record(r, g, args)], args.output, sys.stdout)
    return 0


def cmd_compare(args) -> int:
    base_graph = _load_graph(args.input, args.format)
    label = Path(args.input).name

    reports: list[tuple[CountReport, CsrGraph]] = []
    baselines: dict[KernelChoice, CountReport] = {}
    for order in (SortOrder.ORIGINAL, SortOrder.DEGREE_DESC, SortOrder.DEGREE_ASC):
        g = _apply_order(base_graph, order)
        for kernel in (KernelChoice.SCALAR, KernelChoice.BLOCKED):
            r = _run(g, kernel, args, graph_label=label, order_label=order.value)
            if order is SortOrder.ORIGINAL:
                baselines[kernel] = r
            reports.append((r, g))

    counts = {r.triangles for r, _ in reports}
    if len(counts) != 1:
        raise ConsistencyError(
            f"triangle counts disagree across order/kernel combinations: {sorted(counts)}"
        )

    records = [
        _to_record(r, g, args, baseline=None if args.no_timing else baselines[r.kernel])
        for r, g in reports
    ]
    emit_records(records, args.output, sys.stdout)
    return 0


def _generated_edges(args) -> EdgeList:
    kind = args.kind
    if kind == "interleaved-fixture":
        if args.n is not None or args.p is not None:
            raise GraphInputError("interleaved-fixture takes no --n or --p")
        return generate.interleaved_fixture()
    if args.n is None:
        raise GraphInputError(f"generate {kind} requires --n")
    if args.n < 0:
        raise GraphInputError(f"--n must be non-negative, got {args.n}")
    if kind == "gnp":
        p = 0.5 if args.p is None else args.p
        if not 0.0 <= p <= 1.0:
            raise GraphInputError(f"--p must lie in [0, 1], got {p}")
        return generate.gnp_graph(args.n, p, args.seed)
    if args.p is not None:
        raise GraphInputError(f"--p only applies to gnp, not {kind}")
    if kind == "complete":
        return generate.complete_graph(args.n)
    if kind == "star":
        return generate.star_graph(args.n)
    return generate.path_graph(args.n)


def cmd_generate(args) -> int:
    sys.stdout.write(generate.to_text(_generated_edges(args)))
    return 0


def cmd_bench_backends(args) -> int:
    if args.input is not None:
        g = _load_graph(args.input, args.format)
        label = Path(args.input).name
    else:
        g = canonicalize(generate.gnp_graph(args.n, args.p, args.seed))
        label = f"gnp(n={args.n}, p={args.p}, seed={args.seed})"

    print(f"graph: {label}  vertices={g.num_vertices} edges={g.num_edges}")
    print(f"{'backend':<8} {'kernel':<8} {'triangles':>10} {'checks':>12} {'seconds':>12} {'checks/s':>14}")
    for backend in available_backends():
        for kernel in (KernelChoice.SCALAR, KernelChoice.BLOCKED):
            r = counting.measure_count(g, kernel, backend=backend)
            rate = r.stats.match_checks / r.wall_time if r.wall_time > 0 else float("inf")
            print(
                f"{backend:<8} {kernel.value:<8} {r.triangles:>10} "
                f"{r.stats.match_checks:>12} {r.wall_time:>12.6f} {rate:>14.3e}"
            )
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits for --help and usage errors
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 1

    try:
        return args.func(args)
    except ConsistencyError as exc:
        print(f"tricount: internal consistency failure: {exc}", file=sys.stderr)
        return 2
    except (GraphInputError, ValidationError, MetricsError) as exc:
        print(f"tricount: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"tricount: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
