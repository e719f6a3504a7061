import random

from hypothesis import given, settings, strategies as st

from helpers import BI_TRIANGLE, FOUR_CYCLE, THREE_CYCLE, random_strong_graph
from inc2ecb.dominator import compute_dominator_state
from inc2ecb.graph import Digraph, from_edges
from inc2ecb.oracle import oracle_dominator_tree, reaches_without

import pytest


def parents(st):
    return {v: st.parent[v] for v in st.vertices if v != st.s}


def test_three_cycle():
    st = compute_dominator_state(from_edges(3, THREE_CYCLE), 1)
    assert parents(st) == {2: 1, 3: 2}
    assert st.bridges() == [(1, 2), (2, 3)]


def test_bidirected_triangle():
    st = compute_dominator_state(from_edges(3, BI_TRIANGLE), 1)
    assert parents(st) == {2: 1, 3: 1}
    assert st.bridges() == []


def test_four_cycle_with_chord():
    st = compute_dominator_state(from_edges(4, FOUR_CYCLE + [(1, 3)]), 1)
    assert parents(st) == {2: 1, 3: 1, 4: 3}
    assert st.bridges() == [(1, 2), (3, 4)]
    assert st.nca(2, 4) == 1


def test_ancestor_and_nca_basics():
    st = compute_dominator_state(from_edges(3, [(1, 2), (2, 3), (3, 1)]), 1)
    assert st.is_ancestor(1, 3)
    assert not st.is_ancestor(3, 1)
    assert st.nca(2, 2) == 2


def test_unreachable_vertex_rejected():
    with pytest.raises(ValueError):
        compute_dominator_state(from_edges(3, [(1, 2)]), 1)


def test_insert_into_four_cycle():
    g = from_edges(4, FOUR_CYCLE)
    st = compute_dominator_state(g, 1)
    g.add_edge(1, 3)
    rep = st.apply_insertion(1, 3)
    assert rep.z == 1
    assert rep.affected == [3]
    assert sorted(rep.scanned) == [3, 4]
    assert rep.canceled_bridges == [(2, 3)]
    assert not rep.locally_canceled
    assert st.parent[3] == 1 and st.parent[4] == 3


def test_insert_towards_start_is_empty():
    g = from_edges(4, FOUR_CYCLE)
    st = compute_dominator_state(g, 1)
    before = st.snapshot()
    g.add_edge(3, 1)
    rep = st.apply_insertion(3, 1)
    assert rep.empty and not rep.affected
    assert st.snapshot() == before


def test_reverse_side_insert():
    g = from_edges(4, FOUR_CYCLE)
    st = compute_dominator_state(g.reverse(), 1)
    g.add_edge(1, 3)      # reverse side sees (3, 1)
    rep = st.apply_insertion(3, 1)
    assert rep.affected == [] and rep.canceled_bridges == []
    assert st.snapshot() == compute_dominator_state(g.reverse(), 1).snapshot()


def test_dump_format():
    st = compute_dominator_state(from_edges(4, FOUR_CYCLE + [(1, 3)]), 1)
    assert st.dump().splitlines() == ["1 - 0 1 0", "2 1 1 2 1", "3 1 1 1 0", "4 3 2 4 1"]


def _flow_graph(n, extra, rng):
    g = Digraph(n)
    for v in range(2, n + 1):
        g.add_edge(rng.randint(1, v - 1), v)
    for _ in range(extra):
        g.add_edge(rng.randint(1, n), rng.randint(1, n))
    return g


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 11), st.integers(0, 30), st.integers(0, 10**6))
def test_static_methods_agree_with_oracle(n, extra, seed):
    g = _flow_graph(n, extra, random.Random(seed))
    a = compute_dominator_state(g, 1)
    b = compute_dominator_state(g, 1, method="lt")
    assert a.snapshot() == b.snapshot()
    par, br = oracle_dominator_tree(g, 1)
    assert parents(a) == par
    assert set(a.bridges()) == br
    for v in a.vertices:
        if v != 1:
            # bridge flag <=> deleting (d(v), v) cuts v off from the start
            assert a.bridge[v] == (not reaches_without(g, 1, v, (a.parent[v], v)))
            assert a.depth[v] == a.depth[a.parent[v]] + 1
        assert a.root[v] == (v if v == 1 or a.bridge[v] else a.root[a.parent[v]])


@settings(max_examples=120, deadline=None)
@given(st.integers(2, 10), st.integers(0, 10**6))
def test_incremental_equals_recompute(n, seed):
    rng = random.Random(seed)
    g = _flow_graph(n, rng.randint(0, n), rng)
    st = compute_dominator_state(g, 1)
    for _ in range(3 * n):
        x, y = rng.randint(1, n), rng.randint(1, n)
        if g.add_edge(x, y) is None:
            continue
        old_depth = {v: st.depth[v] for v in st.vertices}
        z = st.nca(x, y)
        old_parent = dict(parents(st))
        rep = st.apply_insertion(x, y)
        fresh = compute_dominator_state(g, 1)
        assert st.snapshot() == fresh.snapshot()
        assert set(rep.affected) <= set(rep.scanned)
        changed = {v for v in st.vertices if v != 1 and st.parent[v] != old_parent[v]}
        assert changed == set(rep.affected) or rep.locally_canceled
        for v in st.vertices:
            assert st.depth[v] <= old_depth[v]
        for u, w in g.edges():
            if w != 1:
                assert st.is_ancestor(st.parent[w], u)       # parent property
        if rep.locally_canceled:
            assert any(v not in rep.affected for _, v in rep.canceled_bridges)
            for u, v in rep.canceled_bridges:
                if v not in rep.affected:
                    assert u == z
