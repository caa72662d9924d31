"""Deterministic graph generators for tests and benchmarks.

Every generator returns a raw :class:`~tricount.graph.EdgeList`; run it
through :func:`~tricount.graph.canonicalize` to count on it. Randomized
generators take an explicit seed and are reproducible bit-for-bit.
"""

from __future__ import annotations

import numpy as np

from .graph import EdgeList


def complete_graph(n: int) -> EdgeList:
    """K_n: every pair of the n vertices joined by an edge."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    iu, ju = np.triu_indices(n, k=1)
    return EdgeList(np.column_stack((iu, ju)).astype(np.int64), num_vertices_hint=n)


def path_graph(n: int) -> EdgeList:
    """Path 0-1-...-(n-1)."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    ids = np.arange(n, dtype=np.int64)
    return EdgeList(np.column_stack((ids[:-1], ids[1:])), num_vertices_hint=n)


def cycle_graph(n: int) -> EdgeList:
    """Cycle on n vertices (n >= 3; smaller n degenerates to a path)."""
    el = path_graph(n)
    if n < 3:
        return el
    edges = np.vstack((el.edges, np.array([[n - 1, 0]], dtype=np.int64)))
    return EdgeList(edges, num_vertices_hint=n)


def star_graph(n: int) -> EdgeList:
    """Star with center n-1 and leaves 0..n-2."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n < 2:
        return EdgeList(np.empty((0, 2), dtype=np.int64), num_vertices_hint=n)
    leaves = np.arange(n - 1, dtype=np.int64)
    center = np.full(n - 1, n - 1, dtype=np.int64)
    return EdgeList(np.column_stack((center, leaves)), num_vertices_hint=n)


def gnp_graph(n: int, p: float, seed: int = 0) -> EdgeList:
    """Erdos-Renyi G(n, p): each of the C(n, 2) edges present independently."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    edges = np.column_stack((iu[keep], ju[keep])).astype(np.int64)
    return EdgeList(edges, num_vertices_hint=n)


def interleaved_fixture() -> EdgeList:
    """Worst-case merge fixture: one intersection of perfectly alternating ids.

    Vertex 16's lower neighborhood is the odds 1..15 and vertex 17's is the
    evens 0..14 plus 16. The only stored edge whose endpoints both have
    non-empty lower neighborhoods is 17-16, and there the driver merges the
    entries of 17's row below 16 — the evens [0,2,...,14] — against 16's row
    [1,3,...,15]: the two sides interleave completely and the merge loop
    burns 15 match checks to find 0 common elements. Every other edge pairs
    with an empty neighborhood and costs nothing, so the whole graph counts
    0 triangles at exactly 15 match checks.
    """
    pairs = [(16, k) for k in range(1, 16, 2)]
    pairs += [(17, k) for k in range(0, 15, 2)]
    pairs.append((17, 16))
    return EdgeList.from_pairs(pairs, num_vertices_hint=18)


def star_heavy_graph(n: int = 64, num_hubs: int = 4, seed: int = 7) -> EdgeList:
    """Skewed-degree composite: a few hubs over a sparse random background.

    Hub h attaches to each other vertex with probability 0.9 / 2**h, on top
    of a G(n, 0.06) background, giving a heavily right-skewed degree profile.
    Degree-based relabelings of such a graph move the hub rows to opposite
    ends of the id range, which changes how often long neighborhoods meet,
    and with them the match-check totals.
    """
    if n < 8:
        raise ValueError(f"need n >= 8 for a meaningful skewed fixture, got {n}")
    rng = np.random.default_rng(seed)
    blocks = []
    for h in range(min(num_hubs, n)):
        others = np.arange(n, dtype=np.int64)
        others = others[others != h]
        chosen = others[rng.random(others.size) < 0.9 / 2**h]
        if chosen.size:
            blocks.append(np.column_stack((np.full(chosen.size, h, dtype=np.int64), chosen)))
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < 0.06
    if keep.any():
        blocks.append(np.column_stack((iu[keep], ju[keep])).astype(np.int64))
    if not blocks:
        blocks.append(np.array([[0, 1]], dtype=np.int64))
    return EdgeList(np.concatenate(blocks, axis=0), num_vertices_hint=n)


def to_text(el: EdgeList) -> str:
    """Render an edge list as tab-separated 'src<TAB>dst' lines."""
    return "".join(f"{int(u)}\t{int(v)}\n" for u, v in el.edges)
