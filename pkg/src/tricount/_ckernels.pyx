# cython: language_level=3, boundscheck=False, wraparound=False
# cython: initializedcheck=False, cdivision=True
"""Compiled intersection and counting kernels.

Hot-loop twin of _kernels_py: every counter must agree with the pure-Python
implementation exactly, element for element. The whole-graph entry points
take the CSR arrays directly so no Python objects are touched per edge.
"""

from libc.stdint cimport int32_t, int64_t

BACKEND_NAME = "c"


def scalar_intersect_counts(const int32_t[::1] a, const int32_t[::1] b):
    """Merge-intersect two strictly ascending id lists.

    Returns (matches, match_checks). One match check per loop iteration; the
    loop ends as soon as either list is exhausted. On a match both cursors
    advance, otherwise only the cursor at the smaller id.
    """
    cdef Py_ssize_t i = 0, j = 0
    cdef Py_ssize_t na = a.shape[0], nb = b.shape[0]
    cdef long long matches = 0, checks = 0
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


def blocked_intersect_counts(const int32_t[::1] a, const int32_t[::1] b):
    """8x8 blocked intersection with early termination; scalar tail.

    While both lists have >= 8 elements left, either an entire 8-block is
    skipped (its max id is below the other block's min id) or all 64 pairs
    are compared and matches accumulated; blocks advance past the smaller
    max, both on a tie. Leftovers go through the scalar merge loop.

    Returns (matches, raw_block_comparisons, blocks_skipped,
    scalar_tail_checks, advances) where advances counts elements consumed
    from both lists (8 per block advance, as in the scalar loop for the
    tail).
    """
    cdef Py_ssize_t i = 0, j = 0
    cdef Py_ssize_t na = a.shape[0], nb = b.shape[0]
    cdef long long matches = 0, raw = 0, skipped = 0, tail = 0, advances = 0
    cdef int32_t a_max, b_max, a_min, b_min, x
    cdef int k, l
    while na - i >= 8 and nb - j >= 8:
        a_max = a[i + 7]
        b_max = b[j + 7]
        a_min = a[i]
        b_min = b[j]
        if a_max < b_min:
            i += 8
            skipped += 1
            advances += 8
            continue
        if b_max < a_min:
            j += 8
            skipped += 1
            advances += 8
            continue
        raw += 64
        for k in range(8):
            x = a[i + k]
            for l in range(8):
                if x == b[j + l]:
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


def count_scalar(const int64_t[::1] row_offsets, const int32_t[::1] neighbors):
    """Triangle count via the scalar kernel, no instrumentation (timed path).

    For each stored edge (v, u) the row entries of v preceding u (all ids
    below u) are merge-intersected with the row of u. Entries at or after
    u cannot match anything in u's row (whose ids are all < u), so the
    merge stops at u's position.
    """
    cdef long long tri = 0
    cdef Py_ssize_t n = row_offsets.shape[0] - 1
    cdef Py_ssize_t v, e, i, j, a0, a1, b1
    cdef int32_t u
    for v in range(n):
        a0 = row_offsets[v]
        a1 = row_offsets[v + 1]
        for e in range(a0, a1):
            u = neighbors[e]
            i = a0
            j = row_offsets[u]
            b1 = row_offsets[u + 1]
            while i < e and j < b1:
                if neighbors[i] == neighbors[j]:
                    tri += 1
                    i += 1
                    j += 1
                elif neighbors[i] > neighbors[j]:
                    j += 1
                else:
                    i += 1
    return tri


def count_blocked(const int64_t[::1] row_offsets, const int32_t[::1] neighbors):
    """Triangle count via the blocked kernel, no instrumentation (timed path)."""
    cdef long long tri = 0
    cdef Py_ssize_t n = row_offsets.shape[0] - 1
    cdef Py_ssize_t v, e, i, j, a0, a1, b1
    cdef int32_t u, a_max, b_max, a_min, b_min, x
    cdef int k, l
    for v in range(n):
        a0 = row_offsets[v]
        a1 = row_offsets[v + 1]
        for e in range(a0, a1):
            u = neighbors[e]
            i = a0
            j = row_offsets[u]
            b1 = row_offsets[u + 1]
            while e - i >= 8 and b1 - j >= 8:
                a_max = neighbors[i + 7]
                b_max = neighbors[j + 7]
                a_min = neighbors[i]
                b_min = neighbors[j]
                if a_max < b_min:
                    i += 8
                    continue
                if b_max < a_min:
                    j += 8
                    continue
                for k in range(8):
                    x = neighbors[i + k]
                    for l in range(8):
                        if x == neighbors[j + l]:
                            tri += 1
                if a_max <= b_max:
                    i += 8
                if b_max <= a_max:
                    j += 8
            while i < e and j < b1:
                if neighbors[i] == neighbors[j]:
                    tri += 1
                    i += 1
                    j += 1
                elif neighbors[i] > neighbors[j]:
                    j += 1
                else:
                    i += 1
    return tri


def count_scalar_instrumented(const int64_t[::1] row_offsets,
                              const int32_t[::1] neighbors):
    """Scalar counting pass with counters.

    Returns (triangles, match_checks, matches, advances); advances equals
    match_checks + matches by construction of the merge loop.
    """
    cdef long long tri = 0, checks = 0
    cdef Py_ssize_t n = row_offsets.shape[0] - 1
    cdef Py_ssize_t v, e, i, j, a0, a1, b1
    cdef int32_t u
    for v in range(n):
        a0 = row_offsets[v]
        a1 = row_offsets[v + 1]
        for e in range(a0, a1):
            u = neighbors[e]
            i = a0
            j = row_offsets[u]
            b1 = row_offsets[u + 1]
            while i < e and j < b1:
                checks += 1
                if neighbors[i] == neighbors[j]:
                    tri += 1
                    i += 1
                    j += 1
                elif neighbors[i] > neighbors[j]:
                    j += 1
                else:
                    i += 1
    return tri, checks, tri, checks + tri


def count_blocked_instrumented(const int64_t[::1] row_offsets,
                               const int32_t[::1] neighbors):
    """Blocked counting pass with counters plus a scalar shadow pass.

    The shadow merge over the same rows yields the effective match checks:
    the checks the scalar baseline would have performed on these inputs.
    Returns (triangles, effective_checks, matches, advances,
    raw_block_comparisons, blocks_skipped, scalar_tail_checks).
    """
    cdef long long tri = 0, eff = 0, raw = 0, skipped = 0, tail = 0, advances = 0
    cdef Py_ssize_t n = row_offsets.shape[0] - 1
    cdef Py_ssize_t v, e, i, j, a0, a1, b1
    cdef int32_t u, a_max, b_max, a_min, b_min, x
    cdef int k, l
    for v in range(n):
        a0 = row_offsets[v]
        a1 = row_offsets[v + 1]
        for e in range(a0, a1):
            u = neighbors[e]
            i = a0
            j = row_offsets[u]
            b1 = row_offsets[u + 1]
            while e - i >= 8 and b1 - j >= 8:
                a_max = neighbors[i + 7]
                b_max = neighbors[j + 7]
                a_min = neighbors[i]
                b_min = neighbors[j]
                if a_max < b_min:
                    i += 8
                    skipped += 1
                    advances += 8
                    continue
                if b_max < a_min:
                    j += 8
                    skipped += 1
                    advances += 8
                    continue
                raw += 64
                for k in range(8):
                    x = neighbors[i + k]
                    for l in range(8):
                        if x == neighbors[j + l]:
                            tri += 1
                if a_max <= b_max:
                    i += 8
                    advances += 8
                if b_max <= a_max:
                    j += 8
                    advances += 8
            while i < e and j < b1:
                tail += 1
                if neighbors[i] == neighbors[j]:
                    tri += 1
                    i += 1
                    j += 1
                    advances += 2
                elif neighbors[i] > neighbors[j]:
                    j += 1
                    advances += 1
                else:
                    i += 1
                    advances += 1
            # Shadow scalar pass: effective checks for this intersection.
            i = a0
            j = row_offsets[u]
            while i < e and j < b1:
                eff += 1
                if neighbors[i] == neighbors[j]:
                    i += 1
                    j += 1
                elif neighbors[i] > neighbors[j]:
                    j += 1
                else:
                    i += 1
    return tri, eff, tri, advances, raw, skipped, tail
