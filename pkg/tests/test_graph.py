from __future__ import annotations

import pytest
from hypothesis import given

from transorient.graph import (
    G10_NAMES,
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    fixture_g10,
    format_edge_list,
    from_edge_list,
    g10_ids,
    g10_names,
    induced_subgraph,
    orientation_from_order,
    parse_edge_list,
    path_graph,
    read_edge_list,
    reverse_orientation,
    write_edge_list,
)

from strategies import graphs


def test_g10_shape(g10):
    assert (g10.n, g10.m) == (10, 19)
    assert g10.is_connected()
    assert g10_names(g10_ids("xzqwrvyuab")) == list("xzqwrvyuab")
    assert len(G10_NAMES) == 10


def test_from_edge_list_rejects_loops_and_range():
    with pytest.raises(GraphError):
        from_edge_list(3, [(1, 1)])
    with pytest.raises(GraphError):
        from_edge_list(3, [(0, 3)])


def test_duplicate_edges_rejected():
    with pytest.raises(GraphError):
        from_edge_list(3, [(0, 1), (1, 0)])


def test_check_finds_bad_adjacency():
    for adj in (((1,), ()), ((1, 1), (0, 0)), ((0,),)):
        with pytest.raises(GraphError):
            Graph(len(adj), adj).check()


def test_small_families():
    assert path_graph(4).edges() == [(0, 1), (1, 2), (2, 3)]
    assert cycle_graph(5).m == 5
    assert complete_graph(4).m == 6


def test_induced_subgraph_relabels():
    g = path_graph(5)
    h, back = induced_subgraph(g, [4, 3, 1])
    assert h.n == 3 and h.m == 1
    assert {tuple(sorted((back[a], back[b]))) for a, b in h.edges()} == {(3, 4)}


@given(graphs())
def test_edge_list_roundtrip(g):
    h = parse_edge_list(format_edge_list(g))
    assert (h.n, h.edges()) == (g.n, g.edges())


def test_parse_errors():
    for text in ("", "3 1\n0\n", "3 1\n0 x\n", "3 2\n0 1\n", "-1 0\n"):
        with pytest.raises(GraphError):
            parse_edge_list(text)


def test_parse_skips_comments():
    g = parse_edge_list("# hi\n\n2 1\n# edge\n0 1\n")
    assert g.m == 1


def test_file_io(tmp_path, g10):
    p = tmp_path / "g.txt"
    write_edge_list(g10, p)
    assert read_edge_list(p).edges() == g10.edges()


def test_orientation_from_order_and_reverse(g10):
    order = g10_ids("xzqwrvyuab")
    o = orientation_from_order(g10, order)
    assert len(o) == g10.m
    pos = {v: i for i, v in enumerate(order)}
    assert all(pos[a] < pos[b] for a, b in o)
    assert reverse_orientation(reverse_orientation(o)) == o
    with pytest.raises(GraphError):
        orientation_from_order(g10, order[:-1])
