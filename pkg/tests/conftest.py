from __future__ import annotations

import numpy as np
import pytest

from tricount.graph import CsrGraph, EdgeList, canonicalize


def graph_from_pairs(pairs, num_vertices_hint: int = 0) -> CsrGraph:
    """Canonical CSR graph straight from (u, v) pairs."""
    edges = np.asarray(list(pairs), dtype=np.int64).reshape(-1, 2)
    return canonicalize(EdgeList(edges, num_vertices_hint=num_vertices_hint))


@pytest.fixture
def k4() -> CsrGraph:
    return graph_from_pairs([(a, b) for a in range(4) for b in range(a + 1, 4)])


@pytest.fixture
def triangle() -> CsrGraph:
    return graph_from_pairs([(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def path3() -> CsrGraph:
    return graph_from_pairs([(0, 1), (1, 2)])
