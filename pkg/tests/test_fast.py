from __future__ import annotations

import numpy as np
import pytest

from transorient.fast import orient_arrays, to_csr, transitive_orientation_fast
from transorient.generators import GeneratorConfig, gnp, random_bipartite, random_prime_comparability
from transorient.graph import GraphError, complete_graph, from_edge_list, path_graph
from transorient.orientation import NotPrimeError, OrientationError, transitive_orientation
from transorient.slices import SliceError


def same(g, **kw):
    try:
        a = transitive_orientation(g, **kw)
    except (OrientationError, SliceError) as e:
        with pytest.raises(type(e)):
            transitive_orientation_fast(g, **kw)
        return
    b = transitive_orientation_fast(g, **kw)
    assert (a.order, a.counters, a.source) == (b.order, b.counters, b.source)


def test_csr():
    indptr, indices = to_csr(path_graph(3))
    assert indptr.tolist() == [0, 1, 3, 4]
    assert sorted(indices[1:3].tolist()) == [0, 2]


def test_g10(g10):
    same(g10)
    for s in range(g10.n):
        same(g10, source=s)
        same(g10, source_start=s)


@pytest.mark.parametrize("seed", range(40))
def test_prime_instances(seed):
    same(random_prime_comparability(GeneratorConfig(4 + seed % 6, 0.45, seed)))


@pytest.mark.parametrize("seed", range(40))
def test_arbitrary_connected(seed):
    g = gnp(12, 0.35, seed)
    if g.is_connected():
        same(g)


def test_bipartite_mid_size():
    same(random_bipartite(GeneratorConfig(300, 0.02, seed=1)))


def test_errors():
    with pytest.raises(NotPrimeError):
        transitive_orientation_fast(complete_graph(3))
    indptr, indices = to_csr(from_edge_list(4, [(0, 1), (2, 3)]))
    with pytest.raises(GraphError):
        orient_arrays(indptr, indices)
    with pytest.raises(GraphError):
        transitive_orientation_fast(path_graph(3), source=7)
    assert transitive_orientation_fast(from_edge_list(1, [])).order == [0]
    order, counters, x = orient_arrays(*to_csr(path_graph(4)))
    assert isinstance(order, np.ndarray) and sorted(order.tolist()) == [0, 1, 2, 3]
    assert order[0] == x and sum(counters.values()) > 0
