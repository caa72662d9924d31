from __future__ import annotations

import math

import numpy as np
import pytest

from tricount.counting import (
    CountReport,
    KernelChoice,
    count_triangles,
    measure_count,
    traversed_edges,
)
from tricount.generate import complete_graph, gnp_graph
from tricount.graph import CsrGraph, ValidationError, apply_permutation, canonicalize
from tricount.kernels import ConsistencyError, IntersectStats, available_backends
from tricount.oracle import brute_force_triangles

from conftest import graph_from_pairs


@pytest.fixture(params=available_backends())
def backend(request) -> str:
    return request.param


class TestCountScalar:
    def test_k4_trace(self, k4, backend):
        r = count_triangles(k4, KernelChoice.SCALAR, backend=backend)
        assert r.triangles == 4
        assert r.stats.match_checks == 4
        assert r.stats.advances == 8
        assert r.kernel is KernelChoice.SCALAR

    def test_single_triangle(self, triangle, backend):
        r = count_triangles(triangle, KernelChoice.SCALAR, backend=backend)
        assert r.triangles == 1
        assert r.stats.match_checks == 1
        assert traversed_edges(r) == 2

    def test_path_costs_nothing(self, path3, backend):
        # every intersection pairs with an empty lower neighborhood
        r = count_triangles(path3, KernelChoice.SCALAR, backend=backend)
        assert r.triangles == 0
        assert r.stats.match_checks == 0

    def test_empty_graph(self, backend):
        g = graph_from_pairs([], num_vertices_hint=4)
        r = count_triangles(g, KernelChoice.SCALAR, backend=backend)
        assert r.triangles == 0
        assert r.stats.match_checks == 0


class TestCountBlocked:
    def test_k4(self, k4, backend):
        r = count_triangles(k4, KernelChoice.BLOCKED, backend=backend)
        assert r.triangles == 4
        assert r.stats.match_checks == 4  # effective checks, scalar-equivalent
        assert r.stats.raw_block_comparisons == 0  # all rows shorter than 8
        assert r.stats.scalar_tail_checks == 4

    def test_large_complete_graph_uses_blocks(self, backend):
        g = canonicalize(complete_graph(20))
        r = count_triangles(g, KernelChoice.BLOCKED, backend=backend)
        assert r.triangles == math.comb(20, 3)
        assert r.stats.raw_block_comparisons > 0
        assert r.stats.raw_block_comparisons % 64 == 0

    def test_matches_counted_in_stats(self, k4, backend):
        r = count_triangles(k4, KernelChoice.BLOCKED, backend=backend)
        assert r.stats.matches == r.triangles


class TestKernelAgreement:
    @pytest.mark.parametrize("n,p,seed", [(12, 0.3, 0), (30, 0.2, 1), (48, 0.5, 2), (64, 0.08, 3)])
    def test_both_kernels_and_oracle_agree(self, n, p, seed):
        g = canonicalize(gnp_graph(n, p, seed))
        expected = brute_force_triangles(g)
        for kernel in KernelChoice:
            for backend in available_backends():
                r = count_triangles(g, kernel, backend=backend)
                assert r.triangles == expected

    def test_effective_checks_equal_across_kernels(self):
        g = canonicalize(gnp_graph(40, 0.4, 9))
        rs = count_triangles(g, KernelChoice.SCALAR)
        rb = count_triangles(g, KernelChoice.BLOCKED)
        assert rs.stats.match_checks == rb.stats.match_checks

    def test_complete_graphs_subset(self):
        for n in range(3, 9):
            g = canonicalize(complete_graph(n))
            assert count_triangles(g, KernelChoice.SCALAR).triangles == math.comb(n, 3)
            assert count_triangles(g, KernelChoice.BLOCKED).triangles == math.comb(n, 3)


class TestPermutationInvariance:
    def test_counts_survive_relabeling(self):
        rng = np.random.default_rng(31)
        g = graph_from_pairs(rng.integers(0, 40, size=(150, 2)), num_vertices_hint=40)
        expected = count_triangles(g).triangles
        for _ in range(5):
            permuted = apply_permutation(g, rng.permutation(40))
            assert count_triangles(permuted).triangles == expected
            assert count_triangles(permuted, KernelChoice.BLOCKED).triangles == expected


class TestTraversedEdges:
    def test_identity_on_scalar_reports(self, k4):
        r = count_triangles(k4, KernelChoice.SCALAR)
        assert traversed_edges(r) == r.stats.match_checks + r.triangles == 8

    def test_rejects_blocked_reports(self, k4):
        r = count_triangles(k4, KernelChoice.BLOCKED)
        with pytest.raises(ValueError, match="scalar"):
            traversed_edges(r)

    def test_broken_counters_raise(self):
        fake = CountReport(
            triangles=1,
            stats=IntersectStats(match_checks=1, matches=1, advances=99),
            wall_time=0.0,
            kernel=KernelChoice.SCALAR,
        )
        with pytest.raises(ConsistencyError):
            traversed_edges(fake)


class TestMeasureCount:
    def test_reports_positive_minimum_time(self, k4):
        r = measure_count(k4, min_repetitions=3, min_total_seconds=0.0)
        assert r.wall_time > 0
        assert r.triangles == 4
        assert r.stats.match_checks == 4

    def test_counters_match_single_pass(self):
        g = canonicalize(gnp_graph(32, 0.3, 5))
        timed = measure_count(g, KernelChoice.BLOCKED, min_total_seconds=0.0)
        single = count_triangles(g, KernelChoice.BLOCKED)
        assert timed.triangles == single.triangles
        assert timed.stats == single.stats

    def test_labels_propagate(self, triangle):
        r = measure_count(
            triangle, graph_label="tri", order_label="original", min_total_seconds=0.0
        )
        assert r.graph_label == "tri"
        assert r.order_label == "original"


class TestValidation:
    def test_invalid_csr_rejected(self):
        bad = CsrGraph(2, np.array([0, 0, 1], dtype=np.int64), np.array([1], dtype=np.int32))
        with pytest.raises(ValidationError):
            count_triangles(bad)
