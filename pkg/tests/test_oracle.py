from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given

from transorient.graph import (
    GraphError,
    complete_graph,
    cycle_graph,
    from_edge_list,
    g10_ids,
    orientation_from_order,
    path_graph,
)
from transorient.oracle import (
    OracleLimitError,
    cocomponents_bruteforce,
    enumerate_transitive_orientations,
    is_comparability_bruteforce,
    is_prime_bruteforce,
    is_valid_lbfs_order,
    sources_and_sinks,
    verify_transitive,
)

from strategies import graphs


def test_verify_examples(g10):
    assert verify_transitive(g10, orientation_from_order(g10, g10_ids("xzqwrvyuab")))
    assert not verify_transitive(path_graph(4), {(0, 1), (1, 2), (2, 3)})
    k3 = complete_graph(3)
    assert not verify_transitive(k3, {(0, 1), (1, 2), (2, 0)})
    for order in permutations(range(3)):
        assert verify_transitive(k3, orientation_from_order(k3, order))


def test_verify_rejects_wrong_edge_set():
    with pytest.raises(GraphError):
        verify_transitive(path_graph(3), {(0, 1)})
    with pytest.raises(GraphError):
        verify_transitive(path_graph(3), {(0, 1), (1, 0), (1, 2)})


def test_enumeration_counts():
    assert len(enumerate_transitive_orientations(path_graph(4))) == 2
    assert len(enumerate_transitive_orientations(cycle_graph(5))) == 0
    assert len(enumerate_transitive_orientations(complete_graph(3))) == 6
    assert enumerate_transitive_orientations(from_edge_list(2, [])) == {frozenset()}


def test_g10_is_prime_comparability(g10):
    assert is_prime_bruteforce(g10)
    assert is_comparability_bruteforce(g10)
    assert len(enumerate_transitive_orientations(g10)) == 2
    assert g10_ids("x")[0] in sources_and_sinks(g10)


def test_primality_examples():
    assert not is_prime_bruteforce(complete_graph(3))
    assert is_prime_bruteforce(path_graph(4))
    assert not is_prime_bruteforce(path_graph(3))


def test_limits():
    with pytest.raises(OracleLimitError):
        enumerate_transitive_orientations(path_graph(11))
    with pytest.raises(OracleLimitError):
        is_prime_bruteforce(path_graph(15))


def test_lbfs_validity_examples(g10):
    assert is_valid_lbfs_order(g10, g10_ids("xbyuzqwrva"))
    assert not is_valid_lbfs_order(g10, g10_ids("xabyuzqwrv"))
    k2 = path_graph(2)
    assert is_valid_lbfs_order(k2, [0, 1]) and is_valid_lbfs_order(k2, [1, 0])
    with pytest.raises(GraphError):
        is_valid_lbfs_order(k2, [0, 0])


def test_cocomponents():
    # complement of P4 is P4, so one co-component; complement of 2K2 is C4
    assert cocomponents_bruteforce(path_graph(4), range(4)) == {frozenset(range(4))}
    star = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    assert cocomponents_bruteforce(star, range(4)) == {frozenset([0]), frozenset([1, 2, 3])}


@given(graphs(max_n=6))
def test_bipartite_graphs_are_comparability(g):
    # keep only edges across a fixed bipartition
    h = from_edge_list(g.n, [(u, v) for u, v in g.edges() if (u + v) % 2])
    assert is_comparability_bruteforce(h)


@given(graphs(max_n=6))
def test_enumeration_members_are_transitive(g):
    found = enumerate_transitive_orientations(g)
    for o in found:
        assert verify_transitive(g, o)
        assert frozenset((b, a) for a, b in o) in found
