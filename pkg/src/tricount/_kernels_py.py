"""Pure-Python intersection and counting kernels.

Import-time fallback used when the compiled extension is unavailable, and
the reference twin the extension is tested against: every counter here must
agree with _ckernels exactly.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"


def _as_list(xs) -> list[int]:
    return xs.tolist() if isinstance(xs, np.ndarray) else list(xs)


def scalar_intersect_counts(a, b) -> tuple[int, int]:
    """Merge-intersect two strictly ascending id lists.

    Returns (matches, match_checks); one check per loop iteration, loop ends
    when either list is exhausted.
    """
    a = _as_list(a)
    b = _as_list(b)
    i = j = 0
    na, nb = len(a), len(b)
    matches = checks = 0
    while i < na and j < nb:
        checks += 1
        if a[i] == b[j]:
            matches += 1
            i += 1
            j += 1
        elif a[i] > b[j]:
            j += 1
        else:
            i += 1
    return matches, checks


def blocked_intersect_counts(a, b) -> tuple[int, int, int, int, int]:
    """8x8 blocked intersection with early termination; scalar tail.

    Returns (matches, raw_block_comparisons, blocks_skipped,
    scalar_tail_checks, advances).
    """
    a = _as_list(a)
    b = _as_list(b)
    i = j = 0
    na, nb = len(a), len(b)
    matches = raw = skipped = tail = advances = 0
    while na - i >= 8 and nb - j >= 8:
        a_max = a[i + 7]
        b_max = b[j + 7]
        if a_max < b[j]:
            i += 8
            skipped += 1
            advances += 8
            continue
        if b_max < a[i]:
            j += 8
            skipped += 1
            advances += 8
            continue
        raw += 64
        block_b = b[j : j + 8]
        for x in a[i : i + 8]:
            for y in block_b:
                if x == y:
                    matches += 1
        if a_max <= b_max:
            i += 8
            advances += 8
        if b_max <= a_max:
            j += 8
            advances += 8
    while i < na and j < nb:
        tail += 1
        if a[i] == b[j]:
            matches += 1
            i += 1
            j += 1
            advances += 2
        elif a[i] > b[j]:
            j += 1
            advances += 1
        else:
            i += 1
            advances += 1
    return matches, raw, skipped, tail, advances


def count_scalar(row_offsets, neighbors) -> int:
    """Triangle count via the scalar kernel, no instrumentation.

    For each stored edge (v, u) the row entries of v preceding u (all ids
    below u) are merge-intersected with the row of u. Entries at or after
    u cannot match anything in u's row (whose ids are all < u), so the
    merge stops at u's position.
    """
    offs = _as_list(row_offsets)
    nbrs = _as_list(neighbors)
    tri = 0
    for v in range(len(offs) - 1):
        a0 = offs[v]
        a1 = offs[v + 1]
        for e in range(a0, a1):
            u = nbrs[e]
            i = a0
            j = offs[u]
            b1 = offs[u + 1]
            while i < e and j < b1:
                x = nbrs[i]
                y = nbrs[j]
                if x == y:
                    tri += 1
                    i += 1
                    j += 1
                elif x > y:
                    j += 1
                else:
                    i += 1
    return tri


def count_blocked(row_offsets, neighbors) -> int:
    """Triangle count via the blocked kernel, no instrumentation."""
    offs = _as_list(row_offsets)
    nbrs = _as_list(neighbors)
    tri = 0
    for v in range(len(offs) - 1):
        a0 = offs[v]
        a1 = offs[v + 1]
        for e in range(a0, a1):
            u = nbrs[e]
            i = a0
            j = offs[u]
            b1 = offs[u + 1]
            while e - i >= 8 and b1 - j >= 8:
                a_max = nbrs[i + 7]
                b_max = nbrs[j + 7]
                if a_max < nbrs[j]:
                    i += 8
                    continue
                if b_max < nbrs[i]:
                    j += 8
                    continue
                block_b = nbrs[j : j + 8]
                for x in nbrs[i : i + 8]:
                    for y in block_b:
                        if x == y:
                            tri += 1
                if a_max <= b_max:
                    i += 8
                if b_max <= a_max:
                    j += 8
            while i < e and j < b1:
                x = nbrs[i]
                y = nbrs[j]
                if x == y:
                    tri += 1
                    i += 1
                    j += 1
                elif x > y:
                    j += 1
                else:
                    i += 1
    return tri


def count_scalar_instrumented(row_offsets, neighbors) -> tuple[int, int, int, int]:
    """Scalar counting pass with counters.

    Returns (triangles, match_checks, matches, advances).
    """
    offs = _as_list(row_offsets)
    nbrs = _as_list(neighbors)
    tri = checks = 0
    for v in range(len(offs) - 1):
        a0 = offs[v]
        a1 = offs[v + 1]
        for e in range(a0, a1):
            u = nbrs[e]
            i = a0
            j = offs[u]
            b1 = offs[u + 1]
            while i < e and j < b1:
                checks += 1
                x = nbrs[i]
                y = nbrs[j]
                if x == y:
                    tri += 1
                    i += 1
                    j += 1
                elif x > y:
                    j += 1
                else:
                    i += 1
    return tri, checks, tri, checks + tri


def count_blocked_instrumented(
    row_offsets, neighbors
) -> tuple[int, int, int, int, int, int, int]:
    """Blocked counting pass with counters plus a scalar shadow pass.

    Returns (triangles, effective_checks, matches, advances,
    raw_block_comparisons, blocks_skipped, scalar_tail_checks).
    """
    offs = _as_list(row_offsets)
    nbrs = _as_list(neighbors)
    tri = eff = raw = skipped = tail = advances = 0
    for v in range(len(offs) - 1):
        a0 = offs[v]
        a1 = offs[v + 1]
        for e in range(a0, a1):
            u = nbrs[e]
            b0 = offs[u]
            b1 = offs[u + 1]
            i = a0
            j = b0
            while e - i >= 8 and b1 - j >= 8:
                a_max = nbrs[i + 7]
                b_max = nbrs[j + 7]
                if a_max < nbrs[j]:
                    i += 8
                    skipped += 1
                    advances += 8
                    continue
                if b_max < nbrs[i]:
                    j += 8
                    skipped += 1
                    advances += 8
                    continue
                raw += 64
                block_b = nbrs[j : j + 8]
                for x in nbrs[i : i + 8]:
                    for y in block_b:
                        if x == y:
                            tri += 1
                if a_max <= b_max:
                    i += 8
                    advances += 8
                if b_max <= a_max:
                    j += 8
                    advances += 8
            while i < e and j < b1:
                tail += 1
                x = nbrs[i]
                y = nbrs[j]
                if x == y:
                    tri += 1
                    i += 1
                    j += 1
                    advances += 2
                elif x > y:
                    j += 1
                    advances += 1
                else:
                    i += 1
                    advances += 1
            # Shadow scalar pass: effective checks for this intersection.
            i = a0
            j = b0
            while i < e and j < b1:
                eff += 1
                x = nbrs[i]
                y = nbrs[j]
                if x == y:
                    i += 1
                    j += 1
                elif x > y:
                    j += 1
                else:
                    i += 1
    return tri, eff, tri, advances, raw, skipped, tail
