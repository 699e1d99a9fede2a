"""Hypothesis strategies shared by the test modules."""

from __future__ import annotations

from hypothesis import strategies as st

from transorient.graph import Graph, from_edge_list


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 12, connected: bool = False) -> Graph:
    """Arbitrary simple graphs; ``connected`` adds a random spanning tree."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = set(draw(st.lists(st.sampled_from(pairs), unique=True))) if pairs else set()
    if connected:
        for v in range(1, n):
            u = draw(st.integers(0, v - 1))
            edges.add((u, v))
    return from_edge_list(n, sorted(edges))
