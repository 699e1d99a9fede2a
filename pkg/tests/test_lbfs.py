from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from transorient.graph import GraphError, g10_ids, g10_names, path_graph
from transorient.lbfs import lbfs, lbfs_from, naive_lbfs_from
from transorient.oracle import is_valid_lbfs_order

from strategies import graphs


def test_g10_order_and_labels(g10):
    r = lbfs(g10)
    assert g10_names(r.sigma) == list("xbyuzqwrva")
    # labels of u and a: visited after x,b,y and after z respectively
    assert r.labels[g10_ids("u")[0]] == (9, 8)
    assert r.labels[g10_ids("a")[0]] == (6,)
    assert sum(len(l) for l in r.labels) == g10.m


def test_p4_every_start():
    g = path_graph(4)
    for s in range(4):
        r = lbfs_from(g, s)
        assert r.sigma[0] == s
        slow = naive_lbfs_from(g, s)
        assert (r.sigma, r.labels) == (slow.sigma, slow.labels)


def test_bad_start():
    with pytest.raises(GraphError):
        lbfs_from(path_graph(3), 3)


@given(graphs(max_n=16), st.data())
def test_matches_naive(g, data):
    s = data.draw(st.integers(0, g.n - 1))
    fast, slow = lbfs_from(g, s), naive_lbfs_from(g, s)
    assert (fast.sigma, fast.labels, fast.position) == (slow.sigma, slow.labels, slow.position)


@given(graphs(max_n=14))
def test_result_invariants(g):
    r = lbfs(g)
    assert sorted(r.sigma) == list(range(g.n))
    assert all(r.position[v] == i for i, v in enumerate(r.sigma))
    # final labels need not decrease along sigma (a later vertex keeps growing
    # its label after an earlier one is visited); maximality at pick time does
    assert sum(len(l) for l in r.labels) == g.m
    assert is_valid_lbfs_order(g, r.sigma)
