"""Whole-graph triangle counting driver.

For every stored edge (v, u) the driver intersects the part of N_l(v)
preceding u with all of N_l(u). Each shared neighbor w closes the wedge
w-u-v into exactly one triangle; entries of N_l(v) at or after u are
skipped because N_l(u) only holds ids below u, so they can never match.

Timing and instrumentation are separate passes: the timed pass runs the
uninstrumented kernel only, then a second untimed pass collects counters
(including the blocked kernel's scalar shadow for effective checks).
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field

from .graph import CsrGraph, validate_csr
from .kernels import ConsistencyError, IntersectStats, get_backend


class KernelChoice(enum.Enum):
    SCALAR = "scalar"
    BLOCKED = "blocked"


@dataclass
class CountReport:
    """Result of counting one graph with one kernel."""

    triangles: int
    stats: IntersectStats
    wall_time: float
    kernel: KernelChoice
    graph_label: str = ""
    order_label: str = ""


def _fast_counter(impl, kernel: KernelChoice):
    return impl.count_scalar if kernel is KernelChoice.SCALAR else impl.count_blocked


def _instrumented_pass(impl, kernel: KernelChoice, g: CsrGraph) -> tuple[int, IntersectStats]:
    if kernel is KernelChoice.SCALAR:
        tri, checks, matches, advances = impl.count_scalar_instrumented(
            g.row_offsets, g.neighbors
        )
        stats = IntersectStats(match_checks=checks, matches=matches, advances=advances)
    else:
        tri, eff, matches, advances, raw, skipped, tail = impl.count_blocked_instrumented(
            g.row_offsets, g.neighbors
        )
        stats = IntersectStats(
            match_checks=eff,
            matches=matches,
            advances=advances,
            raw_block_comparisons=raw,
            blocks_skipped=skipped,
            scalar_tail_checks=tail,
        )
    return tri, stats


def count_triangles(
    g: CsrGraph,
    kernel: KernelChoice = KernelChoice.SCALAR,
    *,
    backend: str | None = None,
    graph_label: str = "",
    order_label: str = "",
) -> CountReport:
    """Count triangles: one timed pass plus one untimed instrumented pass."""
    validate_csr(g)
    impl = get_backend(backend)
    fast = _fast_counter(impl, kernel)

    start = time.perf_counter()
    tri = fast(g.row_offsets, g.neighbors)
    wall = time.perf_counter() - start

    tri_counted, stats = _instrumented_pass(impl, kernel, g)
    if tri_counted != tri:
        raise ConsistencyError(
            f"instrumented pass counted {tri_counted} triangles, timed pass {tri}"
        )
    return CountReport(int(tri), stats, wall, kernel, graph_label, order_label)


def measure_count(
    g: CsrGraph,
    kernel: KernelChoice = KernelChoice.SCALAR,
    *,
    backend: str | None = None,
    graph_label: str = "",
    order_label: str = "",
    min_repetitions: int = 3,
    min_total_seconds: float = 0.1,
) -> CountReport:
    """Benchmark-grade count: warm-up, then repeated timed passes.

    Runs at least min_repetitions and keeps going until the accumulated
    measured time exceeds min_total_seconds; wall_time is the minimum over
    repetitions. Counters come from a separate untimed pass, so shadow work
    never pollutes the timing.
    """
    validate_csr(g)
    impl = get_backend(backend)
    fast = _fast_counter(impl, kernel)
    offs, nbrs = g.row_offsets, g.neighbors

    expected = fast(offs, nbrs)  # warm-up
    best = float("inf")
    total = 0.0
    reps = 0
    while reps < min_repetitions or total < min_total_seconds:
        start = time.perf_counter()
        tri = fast(offs, nbrs)
        elapsed = time.perf_counter() - start
        if tri != expected:
            raise ConsistencyError(
                f"repetition {reps} counted {tri} triangles, warm-up counted {expected}"
            )
        best = min(best, elapsed)
        total += elapsed
        reps += 1

    tri_counted, stats = _instrumented_pass(impl, kernel, g)
    if tri_counted != expected:
        raise ConsistencyError(
            f"instrumented pass counted {tri_counted} triangles, timed passes {expected}"
        )
    return CountReport(int(expected), stats, best, kernel, graph_label, order_label)


def traversed_edges(r: CountReport) -> int:
    """Total adjacency entries consumed by a scalar run.

    Equals match checks plus triangles; a violation means the counters are
    broken, so it raises rather than returning a wrong number.
    """
    if r.kernel is not KernelChoice.SCALAR:
        raise ValueError("traversed_edges is defined for scalar-kernel reports")
    expected = r.stats.match_checks + r.triangles
    if r.stats.advances != expected:
        raise ConsistencyError(
            f"advances = {r.stats.advances} but match_checks + triangles = {expected}"
        )
    return r.stats.advances
