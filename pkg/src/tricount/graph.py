"""Graph ingestion and canonicalization into lower-triangular CSR form.

Loaders accept SNAP-style edge lists and MatrixMarket coordinate files and
produce a raw :class:`EdgeList`. :func:`canonicalize` turns that into the
counting substrate: for every undirected edge {a, b} with a != b, exactly one
entry min(a, b) is stored in the row of max(a, b), rows sorted strictly
ascending. Row v is the lower neighborhood of v: its neighbors with smaller
vertex id.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO, TYPE_CHECKING, Iterable

import numpy as np

if TYPE_CHECKING:
    from .reorder import Permutation

# Neighbor ids are stored as int32 (the blocked kernel compares 8 ids at a
# time); offsets and counters are 64-bit.
_MAX_VERTEX_ID = 2**31 - 1


class GraphInputError(ValueError):
    """Malformed or unsupported graph input."""


class ValidationError(ValueError):
    """A CSR graph or permutation violates its structural invariants."""


@dataclass(frozen=True)
class EdgeList:
    """Raw (src, dst) pairs as ingested.

    May contain duplicates, self-loops, and both orientations of the same
    undirected edge; canonicalization removes all of those.
    """

    edges: np.ndarray  # shape (m, 2), int64
    num_vertices_hint: int = 0

    def __post_init__(self) -> None:
        arr = np.asarray(self.edges, dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, 2)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError(f"edges must have shape (m, 2), got {arr.shape}")
        if arr.size and arr.min() < 0:
            raise GraphInputError("vertex ids must be non-negative")
        object.__setattr__(self, "edges", arr)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], num_vertices_hint: int = 0) -> EdgeList:
        return cls(np.asarray(list(pairs), dtype=np.int64), num_vertices_hint)

    def __len__(self) -> int:
        return self.edges.shape[0]


@dataclass(frozen=True)
class CsrGraph:
    """Undirected graph stored as its lower-triangular adjacency in CSR form.

    Every entry u in row v satisfies u < v, so self-loops and duplicate
    orientations cannot be represented and each triangle is visible exactly
    once.
    """

    num_vertices: int
    row_offsets: np.ndarray  # int64, length num_vertices + 1
    neighbors: np.ndarray  # int32, concatenated sorted rows

    def __post_init__(self) -> None:
        offs = np.ascontiguousarray(self.row_offsets, dtype=np.int64)
        nbrs = np.ascontiguousarray(self.neighbors, dtype=np.int32)
        object.__setattr__(self, "row_offsets", offs)
        object.__setattr__(self, "neighbors", nbrs)

    @property
    def num_edges(self) -> int:
        return int(self.row_offsets[-1])

    def row(self, v: int) -> np.ndarray:
        """Lower neighborhood of v (strictly ascending ids below v)."""
        return self.neighbors[self.row_offsets[v] : self.row_offsets[v + 1]]

    def to_edge_list(self) -> EdgeList:
        """Re-express the stored entries as (v, u) pairs with v > u."""
        rows = np.repeat(
            np.arange(self.num_vertices, dtype=np.int64), np.diff(self.row_offsets)
        )
        pairs = np.column_stack((rows, self.neighbors.astype(np.int64)))
        return EdgeList(pairs, num_vertices_hint=self.num_vertices)


def load_edge_list(stream: IO[str] | Iterable[str]) -> EdgeList:
    """Parse a SNAP-style whitespace-separated edge list.

    Lines starting with '#' or '%' are comments, blank lines are skipped.
    Data lines hold two integer vertex ids; an optional third field (weight,
    timestamp, ...) is ignored. No canonicalization happens here: duplicates
    and self-loops are preserved.
    """
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise GraphInputError(
                f"line {lineno}: expected 'src dst [extra]', got {len(parts)} fields"
            )
        try:
            src, dst = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphInputError(
                f"line {lineno}: non-integer vertex id in {parts[:2]!r}"
            ) from None
        if src < 0 or dst < 0:
            raise GraphInputError(f"line {lineno}: negative vertex id")
        edges.append((src, dst))
    return EdgeList.from_pairs(edges)


def load_matrix_market(stream: IO[str] | Iterable[str]) -> EdgeList:
    """Parse a MatrixMarket coordinate file into an EdgeList.

    Supports pattern/real/integer fields with general or symmetric symmetry.
    Indices are shifted to 0-based; values are ignored; symmetric files yield
    one edge per stored entry (canonicalization symmetrizes later). The
    declared dimensions become the vertex-count hint.
    """
    it = enumerate(stream, start=1)
    try:
        _, raw = next(it)
    except StopIteration:
        raise GraphInputError("empty file: missing MatrixMarket header") from None

    tokens = raw.strip().lower().split()
    if len(tokens) < 5 or not tokens[0].startswith("%%matrixmarket") or tokens[1] != "matrix":
        raise GraphInputError(f"not a MatrixMarket matrix header: {raw.strip()!r}")
    layout, field, symmetry = tokens[2], tokens[3], tokens[4]
    if layout != "coordinate":
        raise GraphInputError(f"unsupported MatrixMarket format {layout!r} (need coordinate)")
    if field not in ("pattern", "real", "integer"):
        raise GraphInputError(f"unsupported MatrixMarket field {field!r}")
    if symmetry not in ("general", "symmetric"):
        raise GraphInputError(f"unsupported MatrixMarket symmetry {symmetry!r}")

    dims: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in it:
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        parts = line.split()
        if dims is None:
            if len(parts) != 3:
                raise GraphInputError(f"line {lineno}: malformed dimension line {line!r}")
            try:
                rows, cols, _nnz = (int(p) for p in parts)
            except ValueError:
                raise GraphInputError(
                    f"line {lineno}: malformed dimension line {line!r}"
                ) from None
            dims = (rows, cols)
            continue
        if len(parts) not in (2, 3):
            raise GraphInputError(f"line {lineno}: expected 'i j [value]', got {line!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphInputError(f"line {lineno}: non-integer coordinate in {line!r}") from None
        if not (1 <= i <= dims[0]) or not (1 <= j <= dims[1]):
            raise GraphInputError(
                f"line {lineno}: entry ({i}, {j}) out of range for {dims[0]}x{dims[1]} matrix"
            )
        edges.append((i - 1, j - 1))

    if dims is None:
        raise GraphInputError("missing dimension line")
    return EdgeList.from_pairs(edges, num_vertices_hint=max(dims))


def canonicalize(el: EdgeList) -> CsrGraph:
    """Build the lower-triangular CSR graph for an edge list.

    Edges are treated as undirected; self-loops are dropped; parallel edges
    and mirrored orientations collapse to a single stored entry. The number
    of dropped inputs is derivable as len(el) - result.num_edges.
    """
    edges = el.edges
    if len(edges):
        n = max(int(el.num_vertices_hint), int(edges.max()) + 1)
    else:
        n = int(el.num_vertices_hint)
    if n > _MAX_VERTEX_ID:
        raise GraphInputError(f"graph has {n} vertices; ids must fit in int32")

    if len(edges) == 0:
        return CsrGraph(n, np.zeros(n + 1, dtype=np.int64), np.empty(0, dtype=np.int32))

    src = edges[:, 0]
    dst = edges[:, 1]
    keep = src != dst
    hi = np.maximum(src, dst)[keep]
    lo = np.minimum(src, dst)[keep]
    # Encode (row, col) pairs into one key so a single unique() both
    # deduplicates and yields row-major, column-ascending order.
    keys = np.unique(hi * np.int64(n) + lo)
    rows = keys // n
    cols = keys % n

    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(rows, minlength=n), out=offsets[1:])
    return CsrGraph(n, offsets, cols.astype(np.int32))


def validate_csr(g: CsrGraph) -> None:
    """Check every structural invariant of a lower-triangular CSR graph."""
    offs = g.row_offsets
    nbrs = g.neighbors
    n = g.num_vertices
    if n < 0:
        raise ValidationError("num_vertices must be non-negative")
    if offs.shape != (n + 1,):
        raise ValidationError(f"row_offsets has length {offs.shape[0]}, expected {n + 1}")
    if n >= 0 and (offs.size == 0 or offs[0] != 0):
        raise ValidationError("row_offsets[0] must be 0")
    if np.any(np.diff(offs) < 0):
        raise ValidationError("row_offsets must be non-decreasing")
    m = nbrs.shape[0]
    if int(offs[-1]) != m:
        raise ValidationError(
            f"row_offsets[-1] = {int(offs[-1])} does not match {m} stored entries"
        )
    if m == 0:
        return
    row_of = np.repeat(np.arange(n, dtype=np.int64), np.diff(offs))
    if np.any(nbrs < 0) or np.any(nbrs >= row_of):
        raise ValidationError("every entry u in row v must satisfy 0 <= u < v")
    # Strict ascent applies within rows only: skip pairs that straddle a
    # row boundary.
    is_start = np.zeros(m, dtype=bool)
    starts = offs[:-1]
    is_start[starts[starts < m]] = True
    interior = ~is_start[1:]
    if np.any(nbrs[1:][interior] <= nbrs[:-1][interior]):
        raise ValidationError("row entries must be strictly ascending (no duplicates)")


def apply_permutation(g: CsrGraph, p: Permutation | np.ndarray) -> CsrGraph:
    """Relabel vertices and re-canonicalize.

    Accepts a Permutation or a bare forward array (forward[old_id] = new_id).
    The result is isomorphic to g, so its triangle count is unchanged; the
    stored rows are rebuilt for the new labeling.
    """
    forward = np.asarray(getattr(p, "forward", p), dtype=np.int64)
    n = g.num_vertices
    if forward.shape != (n,):
        raise ValidationError(
            f"permutation length {forward.shape[0] if forward.ndim == 1 else forward.shape}"
            f" does not match {n} vertices"
        )
    if n and (forward.min() < 0 or forward.max() >= n):
        raise ValidationError("permutation values must lie in [0, num_vertices)")
    if n and np.any(np.bincount(forward, minlength=n) != 1):
        raise ValidationError("permutation must be a bijection on [0, num_vertices)")

    el = g.to_edge_list()
    relabeled = forward[el.edges] if len(el) else el.edges
    return canonicalize(EdgeList(relabeled, num_vertices_hint=n))
