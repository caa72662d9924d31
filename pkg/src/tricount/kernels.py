"""Instrumented set-intersection kernels with a pluggable backend.

The compiled extension is preferred when it imported cleanly; the
pure-Python module is the fallback. Both expose identical counter semantics,
so the choice affects speed only. Set TRICOUNT_PURE_PYTHON=1 to force the
fallback.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from . import _kernels_py

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_FORCE_PY = os.environ.get("TRICOUNT_PURE_PYTHON", "") not in ("", "0")
_DEFAULT = _kernels_py if (_ckernels is None or _FORCE_PY) else _ckernels

_ID_MAX = 2**31 - 1


class ConsistencyError(RuntimeError):
    """Two routes that must agree (kernels, passes, backends) disagreed."""


def available_backends() -> tuple[str, ...]:
    return ("c", "python") if _ckernels is not None else ("python",)


def active_backend() -> str:
    """Name of the backend used when none is requested explicitly."""
    return _DEFAULT.BACKEND_NAME


def get_backend(name: str | None = None):
    """Resolve a backend module by name ('c' or 'python'); None = default."""
    if name is None:
        return _DEFAULT
    if name == "python":
        return _kernels_py
    if name == "c":
        if _ckernels is None:
            raise ValueError("compiled backend requested but the extension is not built")
        return _ckernels
    raise ValueError(f"unknown backend {name!r}; expected 'c' or 'python'")


@dataclass
class IntersectStats:
    """Work counters for one or more set intersections.

    match_checks is the number of scalar merge-loop iterations (for the
    blocked kernel: the effective checks a scalar run would have performed);
    advances is the total elements consumed from both lists, i.e. the
    traversed edges. raw_block_comparisons counts all-pairs comparisons
    actually issued by the blocked kernel (64 per processed block pair) and
    blocks_skipped the block pairs rejected by early termination.
    """

    match_checks: int = 0
    matches: int = 0
    advances: int = 0
    raw_block_comparisons: int = 0
    blocks_skipped: int = 0
    scalar_tail_checks: int = 0

    def merge(self, other: IntersectStats) -> None:
        """Accumulate another intersection's counters into this one."""
        self.match_checks += other.match_checks
        self.matches += other.matches
        self.advances += other.advances
        self.raw_block_comparisons += other.raw_block_comparisons
        self.blocks_skipped += other.blocks_skipped
        self.scalar_tail_checks += other.scalar_tail_checks


def _ascending_ids(xs) -> np.ndarray:
    """Coerce to a contiguous int32 array, enforcing the kernel precondition."""
    arr = np.asarray(xs)
    if arr.size == 0:
        return np.empty(0, dtype=np.int32)
    if arr.ndim != 1 or arr.dtype.kind not in "iu":
        raise ValueError("expected a 1-d sequence of integer ids")
    if int(arr.min()) < 0 or int(arr.max()) > _ID_MAX:
        raise ValueError("ids must be non-negative and fit in int32")
    out = np.ascontiguousarray(arr, dtype=np.int32)
    if np.any(np.diff(out) <= 0):
        raise ValueError("ids must be strictly ascending (duplicates forbidden)")
    return out


def scalar_intersect(a, b, backend: str | None = None) -> tuple[int, IntersectStats]:
    """Merge-based intersection of two ascending id lists, with counters."""
    impl = get_backend(backend)
    a = _ascending_ids(a)
    b = _ascending_ids(b)
    matches, checks = impl.scalar_intersect_counts(a, b)
    stats = IntersectStats(match_checks=checks, matches=matches, advances=checks + matches)
    return matches, stats


def blocked_intersect(a, b, backend: str | None = None) -> tuple[int, IntersectStats]:
    """8x8 blocked intersection with counters.

    match_checks in the returned stats is the effective count from a scalar
    shadow pass over the same inputs, not a function of the block masks.
    """
    impl = get_backend(backend)
    a = _ascending_ids(a)
    b = _ascending_ids(b)
    matches, raw, skipped, tail, advances = impl.blocked_intersect_counts(a, b)
    shadow_matches, eff = impl.scalar_intersect_counts(a, b)
    if shadow_matches != matches:
        raise ConsistencyError(
            f"blocked kernel found {matches} matches but the scalar shadow found {shadow_matches}"
        )
    stats = IntersectStats(
        match_checks=eff,
        matches=matches,
        advances=advances,
        raw_block_comparisons=raw,
        blocks_skipped=skipped,
        scalar_tail_checks=tail,
    )
    return matches, stats


def effective_checks(a, b, backend: str | None = None) -> int:
    """Match checks the scalar baseline performs on these inputs.

    This is the effective work attributed to any kernel on (a, b); raw block
    comparisons beyond it are wasted work.
    """
    impl = get_backend(backend)
    _, checks = impl.scalar_intersect_counts(_ascending_ids(a), _ascending_ids(b))
    return int(checks)
