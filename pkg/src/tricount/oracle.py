"""Brute-force ground truth for tests.

Deliberately naive: these must be obviously correct, share no code with the
merge kernels, and are only meant for small inputs (n up to a few hundred).
"""

from __future__ import annotations

from .graph import CsrGraph


def brute_force_triangles(g: CsrGraph) -> int:
    """Count triples i < j < k with all three undirected edges present."""
    n = g.num_vertices
    adj: list[set[int]] = [set() for _ in range(n)]
    for v in range(n):
        for u in g.row(v).tolist():
            adj[v].add(u)
            adj[u].add(v)
    count = 0
    for i in range(n):
        ai = adj[i]
        for j in range(i + 1, n):
            if j not in ai:
                continue
            aj = adj[j]
            for k in range(j + 1, n):
                if k in ai and k in aj:
                    count += 1
    return count


def brute_force_intersection(a, b) -> int:
    """Set-intersection cardinality via hashing."""
    return len({int(x) for x in a} & {int(y) for y in b})
