"""Derived performance metrics and record serialization.

A MetricRecord pairs the conventional edges-per-second figure with the
work-based ones: match checks per second, per cycle (against a configured
nominal frequency, not hardware counters), speedup over the original-order
baseline, and the technology exponent from T = (num_edges / n1) ** beta.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from typing import IO, Iterable, Sequence

from .counting import CountReport


class MetricsError(ValueError):
    """A metric is undefined for the given inputs."""


_COLUMNS = (
    "graph_label",
    "order_label",
    "kernel_label",
    "num_vertices",
    "num_edges",
    "triangles",
    "match_checks",
    "wall_time_s",
    "checks_per_sec",
    "edges_per_sec",
    "checks_per_cycle",
    "speedup",
    "beta",
)
_INT_COLUMNS = frozenset({"num_vertices", "num_edges", "triangles", "match_checks"})
_LABEL_COLUMNS = frozenset({"graph_label", "order_label", "kernel_label"})


@dataclass
class MetricRecord:
    graph_label: str
    order_label: str
    kernel_label: str
    num_vertices: int
    num_edges: int
    triangles: int
    match_checks: int
    wall_time: float
    checks_per_second: float | None
    edges_per_second: float | None
    checks_per_cycle: float | None = None
    speedup_vs_original: float | None = None
    beta: float | None = None


def derive_metrics(
    r: CountReport,
    num_vertices: int,
    num_edges: int,
    *,
    cpu_ghz: float | None = None,
    baseline: CountReport | None = None,
    n1: float | None = None,
) -> MetricRecord:
    """Compute the rate metrics for one timed count.

    checks_per_cycle needs a nominal frequency; speedup needs the
    original-order baseline report; beta needs n1, the edges-per-second
    reference rate (undefined when num_edges == n1, a log-base-1).
    """
    if r.wall_time <= 0:
        raise MetricsError(f"wall_time must be positive, got {r.wall_time}")
    checks_per_second = r.stats.match_checks / r.wall_time
    edges_per_second = num_edges / r.wall_time

    checks_per_cycle = None
    if cpu_ghz is not None:
        if cpu_ghz <= 0:
            raise MetricsError(f"cpu_ghz must be positive, got {cpu_ghz}")
        checks_per_cycle = checks_per_second / (cpu_ghz * 1e9)

    speedup = None
    if baseline is not None:
        if baseline.wall_time <= 0:
            raise MetricsError("baseline wall_time must be positive")
        speedup = baseline.wall_time / r.wall_time

    beta = None
    if n1 is not None:
        if n1 <= 0:
            raise MetricsError(f"n1 must be positive, got {n1}")
        ratio = num_edges / n1
        if ratio <= 0 or ratio == 1.0:
            raise MetricsError(f"beta undefined for num_edges/n1 = {ratio}")
        beta = math.log(r.wall_time) / math.log(ratio)

    return MetricRecord(
        graph_label=r.graph_label,
        order_label=r.order_label,
        kernel_label=r.kernel.value,
        num_vertices=int(num_vertices),
        num_edges=int(num_edges),
        triangles=r.triangles,
        match_checks=r.stats.match_checks,
        wall_time=r.wall_time,
        checks_per_second=checks_per_second,
        edges_per_second=edges_per_second,
        checks_per_cycle=checks_per_cycle,
        speedup_vs_original=speedup,
        beta=beta,
    )


def untimed_record(r: CountReport, num_vertices: int, num_edges: int) -> MetricRecord:
    """Record with wall_time zeroed and all rates absent.

    Used by no-timing runs so repeated invocations are byte-identical.
    """
    return MetricRecord(
        graph_label=r.graph_label,
        order_label=r.order_label,
        kernel_label=r.kernel.value,
        num_vertices=int(num_vertices),
        num_edges=int(num_edges),
        triangles=r.triangles,
        match_checks=r.stats.match_checks,
        wall_time=0.0,
        checks_per_second=None,
        edges_per_second=None,
    )


def _row_values(rec: MetricRecord):
    return (
        rec.graph_label,
        rec.order_label,
        rec.kernel_label,
        rec.num_vertices,
        rec.num_edges,
        rec.triangles,
        rec.match_checks,
        rec.wall_time,
        rec.checks_per_second,
        rec.edges_per_second,
        rec.checks_per_cycle,
        rec.speedup_vs_original,
        rec.beta,
    )


def emit_records(records: Sequence[MetricRecord], format: str = "csv", sink: IO[str] | None = None) -> None:
    """Write records in a stable column order.

    CSV serializes missing optionals as empty fields; JSON-lines omits the
    keys. Floats are written at full precision (repr) so a round-trip is
    lossless.
    """
    if sink is None:
        raise ValueError("emit_records needs a writable sink")
    if format == "csv":
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(_COLUMNS)
        for rec in records:
            writer.writerow("" if v is None else v for v in _row_values(rec))
    elif format == "json-lines":
        for rec in records:
            obj = {
                key: value
                for key, value in zip(_COLUMNS, _row_values(rec))
                if value is not None
            }
            sink.write(json.dumps(obj) + "\n")
    else:
        raise ValueError(f"unknown format {format!r}; expected 'csv' or 'json-lines'")


def _record_from_columns(values: dict) -> MetricRecord:
    def num(key, cast):
        v = values.get(key)
        if v is None or v == "":
            return None
        return cast(v)

    return MetricRecord(
        graph_label=str(values.get("graph_label", "")),
        order_label=str(values.get("order_label", "")),
        kernel_label=str(values.get("kernel_label", "")),
        num_vertices=num("num_vertices", int) or 0,
        num_edges=num("num_edges", int) or 0,
        triangles=num("triangles", int) or 0,
        match_checks=num("match_checks", int) or 0,
        wall_time=num("wall_time_s", float) or 0.0,
        checks_per_second=num("checks_per_sec", float),
        edges_per_second=num("edges_per_sec", float),
        checks_per_cycle=num("checks_per_cycle", float),
        speedup_vs_original=num("speedup", float),
        beta=num("beta", float),
    )


def read_records(text: str, format: str = "csv") -> list[MetricRecord]:
    """Parse emit_records output back into MetricRecords."""
    if format == "csv":
        rows = list(csv.reader(text.splitlines()))
        if not rows:
            return []
        header = tuple(rows[0])
        if header != _COLUMNS:
            raise ValueError(f"unexpected CSV header {header}")
        return [_record_from_columns(dict(zip(header, row))) for row in rows[1:]]
    if format == "json-lines":
        return [
            _record_from_columns(json.loads(line))
            for line in text.splitlines()
            if line.strip()
        ]
    raise ValueError(f"unknown format {format!r}; expected 'csv' or 'json-lines'")
