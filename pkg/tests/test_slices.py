from __future__ import annotations

from hypothesis import given

from transorient.graph import g10_ids, g10_names, path_graph
from transorient.lbfs import lbfs, lbfs_from
from transorient.oracle import (
    active_edges_bruteforce,
    cocomponents_bruteforce,
    maximal_subslices_bruteforce,
    slices_bruteforce,
)
from transorient.slices import analyze, build_slice_tree

from strategies import graphs


def names(vs):
    return "".join(sorted(g10_names(vs)))


def test_g10_slices(g10):
    t, a = analyze(g10, lbfs(g10))
    got = [names(a.members(i)) for i in range(10)]
    # S4 is {u,z,q,w}; r and v sit directly under S3
    assert got == [names(range(10)), "b", "qruvwyz", "quwz", "qwz", "qw", "w", "r", "v", "a"]
    assert g10_names([t.initial(j) for j in t.subslices(2)]) == list("urv")


def test_g10_active_edges(g10):
    _, a = analyze(g10, lbfs(g10))
    counts = [len(a.active_edges(i)) for i in range(10)]
    assert counts == [9, 0, 6, 3, 0, 1, 0, 0, 0, 0]
    pairs = {frozenset(g10_names(e)) for e in a.active_edges(3)}
    assert pairs == {frozenset("uz"), frozenset("uq"), frozenset("uw")}
    assert sorted(map(names, a.cocomponents(3))) == ["qwz", "u"]


def test_p4_slices():
    g = path_graph(4)
    t, a = analyze(g, lbfs_from(g, 0))
    assert len(a.active_edges(0)) == 3
    assert t.parent[0] == -1


def test_slice_tree_parents(g10):
    t = build_slice_tree(lbfs(g10))
    for i in range(1, 10):
        p = t.parent[i]
        assert p < i and set(t.members(i)) < set(t.members(p))


@given(graphs(max_n=11))
def test_matches_definitions(g):
    r = lbfs(g)
    t, a = analyze(g, r)
    sl = slices_bruteforce(g, r.sigma)
    act = active_edges_bruteforce(g, r.sigma)
    for i in range(g.n):
        assert set(a.members(i)) == sl[i]
        subs = [frozenset(t.members(j)) for j in t.subslices(i)]
        assert [frozenset([t.initial(i)])] + subs == maximal_subslices_bruteforce(g, r.sigma, i)
        assert set(a.active_edges(i)) == act[i]
        assert {frozenset(c) for c in a.cocomponents(i)} == cocomponents_bruteforce(g, sl[i])
        # connected vertices: endpoints of active edges, in LBFS order
        ends = {v for e in act[i] for v in e}
        if ends:
            assert a.connected[i] == sorted(ends, key=r.position.__getitem__)


@given(graphs(max_n=40))
def test_active_edges_partition_e(g):
    _, a = analyze(g, lbfs(g))
    seen = [e for i in range(g.n) for e in a.active_edges(i)]
    assert len(seen) == len(set(seen))
    assert set(seen) == set(g.edges())
