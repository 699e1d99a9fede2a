"""Immutable simple undirected graphs, the G10 fixture and the edge-list format."""

from __future__ import annotations

import io
import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Malformed graph input (bad edge list, self-loop, duplicate edge...)."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adjacency[v]`` keeps the neighbours of ``v`` in first-appearance order of
    the edge list the graph was built from; every tie-break downstream is
    defined relative to that order.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "m", sum(len(a) for a in self.adjacency) // 2)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        """Each undirected edge once, as ``(u, v)`` with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def adjacency_sets(self) -> list[frozenset[int]]:
        return [frozenset(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        a, b = self.adjacency[u], self.adjacency[v]
        return v in a if len(a) <= len(b) else u in b

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            for w in self.adjacency[stack.pop()]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == self.n

    def check(self) -> None:
        """Full-scan check of simplicity and symmetry; raises GraphError."""
        sets = [set(a) for a in self.adjacency]
        for u, nbrs in enumerate(self.adjacency):
            if len(sets[u]) != len(nbrs):
                raise GraphError(f"duplicate neighbour in adjacency of {u}")
            for v in nbrs:
                if v == u:
                    raise GraphError(f"self-loop at {u}")
                if u not in sets[v]:
                    raise GraphError(f"asymmetric adjacency: {u}-{v}")


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adj: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, tuple(tuple(a) for a in adj))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices``.

    Returns the subgraph and the table mapping its ids back to ids of ``g``;
    new ids follow the order in which ``vertices`` lists them.
    """
    old_ids: list[int] = []
    new_id: dict[int, int] = {}
    for v in vertices:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph with n={g.n}")
        if v not in new_id:
            new_id[v] = len(old_ids)
            old_ids.append(v)
    adj = tuple(
        tuple(new_id[w] for w in g.adjacency[v] if w in new_id) for v in old_ids
    )
    return Graph(len(old_ids), adj), old_ids


# Vertex names of the example graph, indexed so that the lowest-index
# tie-break reproduces the LBFS x,b,y,u,z,q,w,r,v,a.
G10_NAMES = ("x", "b", "y", "u", "z", "q", "w", "r", "v", "a")
_G10_EDGES = (
    "xb by bu bz bq bw br bv za yu yz yq yw ur qv uz uq uw qw"
)


def fixture_g10() -> Graph:
    idx = {name: i for i, name in enumerate(G10_NAMES)}
    return from_edge_list(10, [(idx[e[0]], idx[e[1]]) for e in _G10_EDGES.split()])


def g10_ids(names: str | Iterable[str]) -> list[int]:
    """Translate fixture vertex names (``"xbz"`` or ``["x", "b"]``) to ids."""
    idx = {name: i for i, name in enumerate(G10_NAMES)}
    return [idx[c] for c in names]


def g10_names(ids: Iterable[int]) -> list[str]:
    return [G10_NAMES[i] for i in ids]


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


# --- edge-list text format ---------------------------------------------------
#
#   # comment
#   n m
#   u v        (m lines, 0-based)


def parse_edge_list(text: str) -> Graph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: expected two integers, got {line!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphError(f"line {lineno}: negative header value")
            header = (a, b)
        else:
            edges.append((a, b))
    if header is None:
        raise GraphError("missing 'n m' header line")
    n, m = header
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    return from_edge_list(n, edges)


def format_edge_list(g: Graph, edges: Sequence[tuple[int, int]] | None = None) -> str:
    edges = g.edges() if edges is None else edges
    out = io.StringIO()
    out.write(f"{g.n} {len(edges)}\n")
    for u, v in edges:
        out.write(f"{u} {v}\n")
    return out.getvalue()


def read_edge_list(path: str | os.PathLike[str]) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path: str | os.PathLike[str]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))


# --- orientations ------------------------------------------------------------

Orientation = frozenset[tuple[int, int]]  # (tail, head) pairs


def orientation_from_order(g: Graph, order: Sequence[int]) -> Orientation:
    """Direct every edge from the endpoint that comes first in ``order``."""
    if sorted(order) != list(range(g.n)):
        raise GraphError("order is not a permutation of the vertices")
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return frozenset((u, v) if pos[u] < pos[v] else (v, u) for u, v in g.edges())


def reverse_orientation(o: Iterable[tuple[int, int]]) -> Orientation:
    return frozenset((b, a) for a, b in o)
