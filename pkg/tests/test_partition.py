from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from transorient.graph import G10_NAMES, g10_ids, path_graph
from transorient.partition import OrderedPartition, PartitionError


def naive_pivot(classes: list[list[int]], v: int, s: set[int]) -> list[list[int]]:
    """Reference for generalized_pivot on plain lists."""
    home = next(i for i, c in enumerate(classes) if v in c)
    out = []
    for i, c in enumerate(classes):
        inside = [e for e in c if e in s]
        outside = [e for e in c if e not in s]
        if i == home or not inside or not outside:
            out.append(c)
        elif i < home:
            out += [inside, outside]
        else:
            out += [outside, inside]
    return out


def test_pivot_sends_neighbours_away():
    p = OrderedPartition([[0], [1, 2, 3]])
    p.pivot(0, path_graph(4))
    assert p.as_lists() == [[0], [2, 3], [1]]
    p.generalized_pivot(1, [2])
    assert p.as_lists() == [[0], [2], [3], [1]]


def test_dump_and_blocks():
    p = OrderedPartition([[0], [1, 2, 3]])
    p.attach_block(1, [3])
    assert p.dump() == "[0][1{3} 2]"
    assert p.block(1) == [3]
    names = list(G10_NAMES)
    assert p.dump(names).startswith("[x][b{u}")
    assert sorted(p.detach_block(1)) == [3]
    assert p.dump() == "[0][1 3 2]"
    p.check()


def test_block_members_travel_with_anchor():
    p = OrderedPartition([[0], [1, 2, 3, 4]])
    p.attach_block(1, [2])
    p.generalized_pivot(0, [1])
    assert p.dump() == "[0][3 4][1{2}]"
    # naming a member without its anchor pulls it out alone
    p.generalized_pivot(0, [2])
    p.check()
    assert [0] in p.as_lists()


def test_push_and_pull():
    p = OrderedPartition([[0], [1, 2, 3]])
    target = p.class_of(1)
    p.pivot_push(0, target, [1])
    assert p.as_lists() == [[0], [2, 3], [1]]
    p = OrderedPartition([[0], [1, 2, 3]])
    p.pivot_pull(0, p.class_of(1), [3])
    assert p.as_lists() == [[0], [3], [1, 2]]
    with pytest.raises(PartitionError):
        p.pivot_push(0, p.class_of(0), [0])


def test_split_out_singleton_and_ordering():
    p = OrderedPartition([[2, 0, 1]])
    p.split_out_singleton(0)
    p.split_out_singleton(1)
    assert p.to_ordering() == [0, 1, 2]
    with pytest.raises(PartitionError):
        OrderedPartition([[0, 1]]).to_ordering()


def test_pop_front_and_refine_front():
    p = OrderedPartition([[0, 1, 2, 3]])
    assert p.pop_front() == 0
    p.refine_front([2, 3])
    assert p.as_lists() == [[2, 3], [1]]
    assert p.pop_front() == 2


def test_g10_first_pivot():
    ids = g10_ids
    from transorient.graph import fixture_g10

    g = fixture_g10()
    p = OrderedPartition([ids("x"), [v for v in range(10) if v != ids("x")[0]]])
    p.pivot(ids("x")[0], g)
    assert p.dump(list(G10_NAMES)) == "[x][y u z q w r v a][b]"


@given(
    st.integers(2, 9).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.permutations(range(n)),
            st.lists(st.tuples(st.integers(0, n - 1), st.sets(st.integers(0, n - 1))), max_size=12),
        )
    )
)
def test_generalized_pivot_matches_reference(case):
    n, perm, steps = case
    cut = n // 2
    p = OrderedPartition([perm[:cut], perm[cut:]] if cut else [perm])
    ref = [sorted(c) for c in p.as_lists()]
    for v, s in steps:
        before = p.ops
        p.generalized_pivot(v, s - {v})
        ref = naive_pivot(ref, v, s - {v})
        p.check()
        assert [sorted(c) for c in p.as_lists()] == [sorted(c) for c in ref]
        assert p.ops >= before
