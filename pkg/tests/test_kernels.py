from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tricount.kernels import (
    IntersectStats,
    available_backends,
    blocked_intersect,
    effective_checks,
    get_backend,
    scalar_intersect,
)
from tricount.oracle import brute_force_intersection

INTERLEAVED_A = [0, 2, 4, 6, 8, 10, 12, 16]
INTERLEAVED_B = [1, 3, 5, 7, 9, 11, 13, 15]

ascending_ids = st.lists(
    st.integers(0, 2**31 - 1), max_size=64, unique=True
).map(sorted)


@pytest.fixture(params=available_backends())
def backend(request) -> str:
    return request.param


class TestScalarIntersect:
    def test_interleaved_pattern_worst_case(self, backend):
        matches, stats = scalar_intersect(INTERLEAVED_A, INTERLEAVED_B, backend)
        assert matches == 0
        assert stats.match_checks == 15
        assert stats.advances == 15

    def test_identical_eight(self, backend):
        matches, stats = scalar_intersect(range(8), range(8), backend)
        assert matches == 8
        assert stats.match_checks == 8
        assert stats.advances == 16

    def test_partial_overlap(self, backend):
        # trace: 1<2, 3>2, 3=3 (match), 5<6, then a exhausted
        matches, stats = scalar_intersect([1, 3, 5], [2, 3, 6], backend)
        assert matches == 1
        assert stats.match_checks == 4
        assert stats.advances == 5

    def test_identical_three(self, backend):
        matches, stats = scalar_intersect([1, 2, 3], [1, 2, 3], backend)
        assert (matches, stats.match_checks, stats.advances) == (3, 3, 6)

    def test_empty_side_costs_nothing(self, backend):
        matches, stats = scalar_intersect([], [1, 2, 3], backend)
        assert matches == 0
        assert stats.match_checks == 0
        assert stats.advances == 0

    def test_both_empty(self, backend):
        matches, stats = scalar_intersect([], [], backend)
        assert (matches, stats.match_checks) == (0, 0)

    def test_non_ascending_rejected(self):
        with pytest.raises(ValueError, match="ascending"):
            scalar_intersect([3, 1], [1, 2])

    def test_duplicate_rejected(self):
        with pytest.raises(ValueError, match="ascending"):
            scalar_intersect([1, 1, 2], [1, 2])

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            scalar_intersect([-1, 2], [1])

    def test_too_large_for_int32_rejected(self):
        with pytest.raises(ValueError):
            scalar_intersect([2**31], [1])

    @given(a=ascending_ids, b=ascending_ids)
    @settings(max_examples=150, deadline=None)
    def test_matches_hash_oracle(self, a, b):
        matches, stats = scalar_intersect(a, b)
        assert matches == brute_force_intersection(a, b)
        assert stats.match_checks <= len(a) + len(b)
        assert stats.advances == stats.match_checks + matches

    @given(a=ascending_ids, b=ascending_ids)
    @settings(max_examples=60, deadline=None)
    def test_symmetric_in_arguments(self, a, b):
        m1, s1 = scalar_intersect(a, b)
        m2, s2 = scalar_intersect(b, a)
        assert (m1, s1.match_checks, s1.advances) == (m2, s2.match_checks, s2.advances)


class TestBlockedIntersect:
    def test_interleaved_single_block(self, backend):
        matches, stats = blocked_intersect(INTERLEAVED_A, INTERLEAVED_B, backend)
        assert matches == 0
        assert stats.match_checks == 15  # effective = what the scalar loop does
        assert stats.raw_block_comparisons == 64
        assert stats.blocks_skipped == 0
        assert stats.scalar_tail_checks == 0

    def test_identical_eight(self, backend):
        matches, stats = blocked_intersect(range(8), range(8), backend)
        assert matches == 8
        assert stats.match_checks == 8
        assert stats.raw_block_comparisons == 64
        assert stats.scalar_tail_checks == 0

    def test_disjoint_ranges_skip_without_comparing(self, backend):
        matches, stats = blocked_intersect(range(8), range(8, 16), backend)
        assert matches == 0
        assert stats.raw_block_comparisons == 0
        assert stats.blocks_skipped == 1
        assert stats.scalar_tail_checks == 0

    def test_two_skips_on_long_disjoint(self, backend):
        matches, stats = blocked_intersect(range(16), range(24, 40), backend)
        assert matches == 0
        assert stats.raw_block_comparisons == 0
        assert stats.blocks_skipped == 2

    def test_tail_after_full_block(self, backend):
        matches, stats = blocked_intersect(range(10), range(10), backend)
        assert matches == 10
        assert stats.raw_block_comparisons == 64
        assert stats.scalar_tail_checks == 2
        assert stats.match_checks == 10

    def test_offset_overlap(self, backend):
        matches, stats = blocked_intersect(range(8), range(4, 12), backend)
        assert matches == 4
        assert stats.raw_block_comparisons == 64
        assert stats.match_checks == 8  # scalar would do 8 iterations here

    def test_short_inputs_fall_through_to_tail(self, backend):
        # trace: 1<2, 3>2, 3=3 (match, exhausts a) -> 3 checks
        matches, stats = blocked_intersect([1, 3], [2, 3, 4], backend)
        assert matches == 1
        assert stats.raw_block_comparisons == 0
        assert stats.blocks_skipped == 0
        assert stats.scalar_tail_checks == stats.match_checks == 3

    @given(a=ascending_ids, b=ascending_ids)
    @settings(max_examples=150, deadline=None)
    def test_agrees_with_scalar_and_oracle(self, a, b):
        matches, stats = blocked_intersect(a, b)
        s_matches, s_stats = scalar_intersect(a, b)
        assert matches == s_matches == brute_force_intersection(a, b)
        assert stats.match_checks == s_stats.match_checks
        assert stats.raw_block_comparisons % 64 == 0
        assert stats.matches == matches

    @given(a=ascending_ids, b=ascending_ids)
    @settings(max_examples=60, deadline=None)
    def test_symmetric_in_arguments(self, a, b):
        m1, s1 = blocked_intersect(a, b)
        m2, s2 = blocked_intersect(b, a)
        assert m1 == m2
        assert s1.raw_block_comparisons == s2.raw_block_comparisons
        assert s1.blocks_skipped == s2.blocks_skipped
        assert s1.scalar_tail_checks == s2.scalar_tail_checks


class TestEffectiveChecks:
    def test_matches_scalar_instrumentation(self, backend):
        assert effective_checks(INTERLEAVED_A, INTERLEAVED_B, backend) == 15
        assert effective_checks(range(8), range(8), backend) == 8
        assert effective_checks([], [1], backend) == 0

    @given(a=ascending_ids, b=ascending_ids)
    @settings(max_examples=80, deadline=None)
    def test_equals_scalar_checks(self, a, b):
        _, stats = scalar_intersect(a, b)
        assert effective_checks(a, b) == stats.match_checks


@pytest.mark.skipif(len(available_backends()) < 2, reason="only one backend built")
class TestBackendParity:
    @given(a=ascending_ids, b=ascending_ids)
    @settings(max_examples=120, deadline=None)
    def test_intersect_counter_parity(self, a, b):
        a32 = np.asarray(a, dtype=np.int32)
        b32 = np.asarray(b, dtype=np.int32)
        impls = [get_backend(name) for name in available_backends()]
        scalar = {tuple(impl.scalar_intersect_counts(a32, b32)) for impl in impls}
        blocked = {tuple(impl.blocked_intersect_counts(a32, b32)) for impl in impls}
        assert len(scalar) == 1
        assert len(blocked) == 1


class TestIntersectStats:
    def test_merge_accumulates_all_counters(self):
        total = IntersectStats()
        total.merge(IntersectStats(match_checks=3, matches=1, advances=4))
        total.merge(
            IntersectStats(
                match_checks=5,
                matches=2,
                advances=7,
                raw_block_comparisons=64,
                blocks_skipped=1,
                scalar_tail_checks=2,
            )
        )
        assert total.match_checks == 8
        assert total.matches == 3
        assert total.advances == 11
        assert total.raw_block_comparisons == 64
        assert total.blocks_skipped == 1
        assert total.scalar_tail_checks == 2
