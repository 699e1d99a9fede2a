"""Input generators: random posets, small prime instances, scaling families."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, GraphError, from_edge_list
from .graph import path_graph as _path_graph
from .oracle import MAX_PRIME_N, is_prime_bruteforce


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    density: float = 0.5
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        if not 0.0 <= self.density <= 1.0:
            raise GraphError(f"density {self.density} outside [0, 1]")

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)


def _poset_graph(n: int, density: float, rng: np.random.Generator) -> Graph:
    order = rng.permutation(n)
    # reach[i]: bitmask of the positions reachable from position i
    reach = [0] * n
    draws = rng.random((n, n)) < density if n else np.zeros((0, 0), dtype=bool)
    for i in range(n - 1, -1, -1):
        r = 0
        for j in np.flatnonzero(draws[i, i + 1:]) + i + 1:
            r |= reach[j] | (1 << int(j))
        reach[i] = r
    edges = []
    for i in range(n):
        r, j = reach[i], 0
        while r:
            if r & 1:
                edges.append((int(order[i]), int(order[j])))
            r >>= 1
            j += 1
    return from_edge_list(n, edges)


def random_poset_graph(cfg: GeneratorConfig) -> Graph:
    """Comparability graph of the transitive closure of a random DAG.

    Each forward pair of a random vertex order becomes an arc with
    probability ``density``; the closure usually adds many more.
    """
    return _poset_graph(cfg.n, cfg.density, cfg.rng())


def random_prime_comparability(cfg: GeneratorConfig, budget: int = 10_000) -> Graph:
    """Rejection-sample poset graphs until one is connected and prime."""
    if cfg.n < 4:
        raise GraphError("no prime graph has fewer than 4 vertices")
    if cfg.n > MAX_PRIME_N:
        raise GraphError(f"primality filter is limited to n <= {MAX_PRIME_N}")
    rng = cfg.rng()
    for _ in range(budget):
        g = _poset_graph(cfg.n, cfg.density, rng)
        if g.is_connected() and is_prime_bruteforce(g):
            return g
    raise GraphError(f"no prime instance within {budget} draws; try another seed or density")


def path_graph(n: int) -> Graph:
    return _path_graph(n)


def even_cycle(n: int) -> Graph:
    """Cycle on ``n`` vertices; ``n`` must be even and at least 6."""
    if n < 6 or n % 2:
        raise GraphError("even cycle needs an even vertex count of at least 6")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def random_bipartite(cfg: GeneratorConfig) -> Graph:
    """Connected bipartite graph: a zigzag path through both sides plus
    random cross edges, each present with probability ``density``.

    Sampling draws about ``density * |L| * |R|`` pairs, so large sparse
    instances are cheap.  Primality is not guaranteed.
    """
    n = cfg.n
    if n < 2:
        raise GraphError("bipartite family needs at least two vertices")
    rng = cfg.rng()
    left, right = (n + 1) // 2, n // 2
    # vertex 2i is the i-th left vertex, 2i+1 the i-th right one
    backbone_u = np.arange(n - 1, dtype=np.int64)
    backbone = np.stack([backbone_u, backbone_u + 1], axis=1)
    want = int(round(cfg.density * left * right))
    if want:
        k = min(left * right, int(want * 1.1) + 16)
        a = rng.integers(0, left, size=k, dtype=np.int64)
        b = rng.integers(0, right, size=k, dtype=np.int64)
        extra = np.stack([2 * a, 2 * b + 1], axis=1)
        edges = np.concatenate([backbone, extra])
    else:
        edges = backbone
    lo = np.minimum(edges[:, 0], edges[:, 1])
    hi = np.maximum(edges[:, 0], edges[:, 1])
    keys = lo * n + hi
    _, first = np.unique(keys, return_index=True)
    first.sort()
    nb = len(backbone)
    keep = first[: max(nb, min(len(first), nb + want))]
    return _from_arrays(n, lo[keep], hi[keep])


def _from_arrays(n: int, us: np.ndarray, vs: np.ndarray) -> Graph:
    # adjacency built directly; the arrays are known to be a simple graph
    deg = np.bincount(np.concatenate([us, vs]), minlength=n)
    order = np.argsort(np.concatenate([us, vs]), kind="stable")
    other = np.concatenate([vs, us])[order]
    bounds = np.concatenate([[0], np.cumsum(deg)])
    flat = other.tolist()
    adj = tuple(tuple(flat[bounds[i]:bounds[i + 1]]) for i in range(n))
    return Graph(n, adj)


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    """Erdos-Renyi graph, for property tests on arbitrary inputs."""
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, 1)
    pick = rng.random(len(iu)) < p
    return from_edge_list(n, zip(iu[pick].tolist(), ju[pick].tolist()))


FAMILIES = ("poset", "prime", "path", "cycle", "bipartite")


def generate(family: str, cfg: GeneratorConfig) -> Graph:
    if family == "poset":
        return random_poset_graph(cfg)
    if family == "prime":
        return random_prime_comparability(cfg)
    if family == "path":
        return path_graph(cfg.n)
    if family == "cycle":
        return even_cycle(cfg.n)
    if family == "bipartite":
        return random_bipartite(cfg)
    raise GraphError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
