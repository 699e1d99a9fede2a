"""Brute-force reference implementations for desk-scale cross-checks.

Nothing here shares code with the fast pipeline beyond the Graph type.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph, GraphError, Orientation

MAX_ENUM_N = 10
MAX_PRIME_N = 14


class OracleLimitError(ValueError):
    pass


def _check_orientation(g: Graph, o: Iterable[tuple[int, int]]) -> set[tuple[int, int]]:
    arcs = set(o)
    want = set(g.edges())
    got = {(a, b) if a < b else (b, a) for a, b in arcs}
    if len(got) != len(arcs) or got != want:
        raise GraphError("orientation does not orient exactly the edges of the graph")
    return arcs


def verify_transitive(g: Graph, o: Iterable[tuple[int, int]]) -> bool:
    """True iff a->b and b->c always come with a->c."""
    arcs = _check_orientation(g, o)
    out: list[set[int]] = [set() for _ in range(g.n)]
    for a, b in arcs:
        out[a].add(b)
    for a in range(g.n):
        oa = out[a]
        for b in oa:
            if not out[b] <= oa:
                return False
    return True


def _guard(g: Graph, limit: int) -> None:
    if g.n > limit:
        raise OracleLimitError(f"n={g.n} exceeds the brute-force limit of {limit}")


def _p3s(g: Graph) -> list[tuple[int, int, int]]:
    """Induced paths a-b-c (a, c non-adjacent) as (a, b, c)."""
    adj = g.adjacency_sets()
    out = []
    for b in range(g.n):
        nb = sorted(adj[b])
        for i, a in enumerate(nb):
            out.extend((a, b, c) for c in nb[i + 1:] if c not in adj[a])
    return out


def enumerate_transitive_orientations(g: Graph) -> set[Orientation]:
    """Every transitive orientation of ``g``.

    A transitive orientation is a partial order, so some total order
    induces it.  All n! orders are scanned with numpy, one chunk per first
    vertex: an order is kept when no induced path a-b-c is directed a->b->c.
    Survivors are deduplicated by their edge-direction fingerprint and
    re-checked with ``verify_transitive``.
    """
    _guard(g, MAX_ENUM_N)
    n = g.n
    edges = g.edges()
    if not edges:
        return {frozenset()}
    p3 = _p3s(g)
    eu = np.array([u for u, _ in edges])
    ev = np.array([v for _, v in edges])
    rest_perms = np.array(list(permutations(range(n - 1))), dtype=np.int8)
    rows = np.arange(len(rest_perms))[:, None]
    fingerprints = []
    for first in range(n):
        others = np.array([v for v in range(n) if v != first], dtype=np.int8)
        perms = np.concatenate(
            [np.full((len(rest_perms), 1), first, dtype=np.int8), others[rest_perms]], axis=1
        )
        pos = np.empty_like(perms)
        pos[rows, perms] = np.arange(n, dtype=np.int8)[None, :]
        keep = np.ones(len(perms), dtype=bool)
        for a, b, c in p3:
            pa, pb, pc = pos[:, a], pos[:, b], pos[:, c]
            keep &= ~(((pa < pb) & (pb < pc)) | ((pc < pb) & (pb < pa)))
        kept = pos[keep]
        if len(kept):
            fingerprints.append(np.unique(kept[:, eu] < kept[:, ev], axis=0))
    out: set[Orientation] = set()
    if not fingerprints:
        return out
    for row in np.unique(np.concatenate(fingerprints), axis=0):
        o = frozenset((u, v) if f else (v, u) for (u, v), f in zip(edges, row))
        if verify_transitive(g, o):
            out.add(o)
    return out


def is_comparability_bruteforce(g: Graph) -> bool:
    return bool(enumerate_transitive_orientations(g))


def is_prime_bruteforce(g: Graph) -> bool:
    """No module M with 1 < |M| < n, by scanning every vertex subset."""
    _guard(g, MAX_PRIME_N)
    n = g.n
    if n <= 2:
        # every subset is trivial for n <= 2
        return True
    masks = np.arange(1 << n, dtype=np.int64)
    size = np.zeros(len(masks), dtype=np.int64)
    for v in range(n):
        size += (masks >> v) & 1
    cand = masks[(size > 1) & (size < n)]
    module = np.ones(len(cand), dtype=bool)
    for v in range(n):
        nb = 0
        for w in g.adjacency[v]:
            nb |= 1 << w
        outside = ((cand >> v) & 1) == 0
        hit = cand & nb
        module &= ~outside | (hit == 0) | (hit == cand)
    return not bool(module.any())


def is_valid_lbfs_order(g: Graph, order: Sequence[int]) -> bool:
    """Replay the labels and check every pick has a maximum label."""
    n = g.n
    if sorted(order) != list(range(n)):
        raise GraphError("order is not a permutation of the vertices")
    labels: list[list[int]] = [[] for _ in range(n)]
    unvisited = set(range(n))
    for k, v in enumerate(order):
        if k and max(labels[u] for u in unvisited) != labels[v]:
            return False
        unvisited.discard(v)
        for w in g.adjacency[v]:
            if w in unvisited:
                labels[w].append(n - k)
    return True


def sources_and_sinks(g: Graph) -> set[int]:
    """Vertices that are a source of some transitive orientation."""
    found: set[int] = set()
    for o in enumerate_transitive_orientations(g):
        indeg = [0] * g.n
        for _, b in o:
            indeg[b] += 1
        found.update(v for v in range(g.n) if indeg[v] == 0)
    return found


def slices_bruteforce(g: Graph, sigma: Sequence[int]) -> list[frozenset[int]]:
    """Slice ``i``: unvisited vertices sharing the largest label just before
    step ``i`` of the search that produced ``sigma``."""
    n = g.n
    labels: list[list[int]] = [[] for _ in range(n)]
    out = []
    visited: set[int] = set()
    for k, v in enumerate(sigma):
        out.append(frozenset(u for u in range(n) if u not in visited and labels[u] == labels[v]))
        visited.add(v)
        for w in g.adjacency[v]:
            if w not in visited:
                labels[w].append(n - k)
    return out


def maximal_subslices_bruteforce(g: Graph, sigma: Sequence[int], i: int) -> list[frozenset[int]]:
    """The initial vertex of slice ``i`` plus the maximal slices strictly inside it."""
    sl = slices_bruteforce(g, sigma)
    inner = [s for s in sl[i + 1:] if s < sl[i]]
    maximal = [s for s in inner if not any(s < t for t in inner)]
    return [frozenset([sigma[i]])] + sorted(set(maximal), key=lambda s: min(sigma.index(v) for v in s))


def active_edges_bruteforce(g: Graph, sigma: Sequence[int]) -> list[set[tuple[int, int]]]:
    """Per slice, the edges joining two different maximal subslices of it."""
    out = []
    for i in range(g.n):
        where = {}
        for k, part in enumerate(maximal_subslices_bruteforce(g, sigma, i)):
            for v in part:
                where[v] = k
        out.append({
            (u, v) for u, v in g.edges()
            if u in where and v in where and where[u] != where[v]
        })
    return out


def cocomponents_bruteforce(g: Graph, vertices: Iterable[int]) -> set[frozenset[int]]:
    """Connected components of the complement of the induced subgraph."""
    vs = set(vertices)
    adj = g.adjacency_sets()
    left = set(vs)
    comps = set()
    while left:
        start = left.pop()
        comp = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            nxt = [w for w in left if w not in adj[u]]
            for w in nxt:
                left.discard(w)
                comp.add(w)
                stack.append(w)
        comps.add(frozenset(comp))
    return comps
