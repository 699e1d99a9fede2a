"""Lexicographic breadth-first search with retained labels."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError
from .partition import OrderedPartition


@dataclass(frozen=True)
class LbfsResult:
    """Visit order plus the final label of every vertex.

    When ``v`` is visited as the k-th vertex (1-based) each unvisited
    neighbour gets ``n - k + 1`` appended to its label, so earlier visitors
    write larger numbers and lexicographic order on labels is plain tuple
    order.
    """

    sigma: tuple[int, ...]
    labels: tuple[tuple[int, ...], ...]
    position: tuple[int, ...]
    ops: int = 0

    def __len__(self) -> int:
        return len(self.sigma)


def _sorted_adjacency(g: Graph) -> list[list[int]]:
    # bucket pass: each list comes out in increasing vertex order
    out: list[list[int]] = [[] for _ in range(g.n)]
    for u, nbrs in enumerate(g.adjacency):
        for w in nbrs:
            out[w].append(u)
    return out


def lbfs_from(g: Graph, start: int) -> LbfsResult:
    """LBFS starting at ``start``; ties go to the lowest vertex index.

    Classes of the refinement stay sorted by vertex index because neighbours
    are fed in increasing order, so the first element of the first class is
    always the lowest-index vertex among those with the largest label.
    """
    n = g.n
    if not 0 <= start < n:
        raise GraphError(f"start vertex {start} not in graph with n={n}")
    sadj = _sorted_adjacency(g)
    p = OrderedPartition([[start], [v for v in range(n) if v != start]] if n > 1 else [[start]])
    visited = [False] * n
    labels: list[list[int]] = [[] for _ in range(n)]
    sigma: list[int] = []
    for k in range(1, n + 1):
        v = p.pop_front()
        visited[v] = True
        sigma.append(v)
        fresh = [w for w in sadj[v] if not visited[w]]
        for w in fresh:
            labels[w].append(n - k + 1)
        p.refine_front(fresh)
    position = [0] * n
    for i, v in enumerate(sigma):
        position[v] = i
    return LbfsResult(
        tuple(sigma), tuple(tuple(lab) for lab in labels), tuple(position), p.ops + 2 * g.m
    )


def lbfs(g: Graph) -> LbfsResult:
    if g.n == 0:
        raise GraphError("LBFS of an empty graph")
    return lbfs_from(g, 0)


def naive_lbfs_from(g: Graph, start: int) -> LbfsResult:
    """Direct transcription with explicit label comparison, O(n^2) and up."""
    n = g.n
    if not 0 <= start < n:
        raise GraphError(f"start vertex {start} not in graph with n={n}")
    labels: list[list[int]] = [[] for _ in range(n)]
    unvisited = set(range(n))
    sigma: list[int] = []
    while unvisited:
        if not sigma:
            v = start
        else:
            best = max(tuple(labels[u]) for u in unvisited)
            v = min(u for u in unvisited if tuple(labels[u]) == best)
        unvisited.remove(v)
        sigma.append(v)
        for w in g.adjacency[v]:
            if w in unvisited:
                labels[w].append(n - len(sigma) + 1)
    position = [0] * n
    for i, v in enumerate(sigma):
        position[v] = i
    return LbfsResult(tuple(sigma), tuple(tuple(lab) for lab in labels), tuple(position))
