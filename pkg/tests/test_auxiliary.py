import random

from helpers import BI_TRIANGLE, FOUR_CYCLE_CHORDS, THREE_CYCLE, random_strong_graph
from inc2ecb.auxiliary import (
    build_auxiliary_graphs,
    components_of,
    edge_rep,
    label_of,
    nearest_ancestor_in,
    static_representatives,
)
from inc2ecb.blocks import TwoEcIndex
from inc2ecb.dominator import compute_dominator_state
from inc2ecb.graph import from_edges
from inc2ecb.oracle import oracle_scc

import pytest


def test_three_cycle_singletons():
    g = from_edges(3, THREE_CYCLE)
    graphs = build_auxiliary_graphs(compute_dominator_state(g, 1), g)
    assert sorted(graphs) == [1, 2, 3]
    assert all(not a.ordinary_edges and not a.shortcut_edges for a in graphs.values())


def test_bidirected_triangle_one_graph():
    g = from_edges(3, BI_TRIANGLE)
    graphs = build_auxiliary_graphs(compute_dominator_state(g, 1), g)
    assert list(graphs) == [1]
    assert len(graphs[1].ordinary_edges) == 6 and graphs[1].shortcut_edges == []


def test_chorded_four_cycle():
    g = from_edges(4, FOUR_CYCLE_CHORDS)
    st = compute_dominator_state(g, 1)
    graphs = build_auxiliary_graphs(st, g)
    assert {r: sorted(a.vertices) for r, a in graphs.items()} == {1: [1, 3], 2: [2], 4: [4]}
    g1 = graphs[1]
    assert sorted((a, b) for _, a, b in g1.ordinary_edges) == [(1, 3), (3, 1)]
    shortcuts = {(g.edge_tail[e], g.edge_head[e]): (a, b) for e, a, b in g1.shortcut_edges}
    assert shortcuts == {(2, 3): (1, 3), (4, 1): (3, 1)}
    assert nearest_ancestor_in(st, 2, 1) == 1
    assert nearest_ancestor_in(st, 4, 1) == 3
    assert nearest_ancestor_in(st, 3, 1) == 3
    with pytest.raises(ValueError):
        nearest_ancestor_in(st, 1, 4)


def test_labels_examples():
    idx = TwoEcIndex(3)
    for e in BI_TRIANGLE:
        idx.insert_edge(*e)
    assert label_of(idx, 1) == label_of(idx, 2) == label_of(idx, 3)
    idx = TwoEcIndex(3)
    for e in THREE_CYCLE:
        idx.insert_edge(*e)
    assert len({label_of(idx, v) for v in (1, 2, 3)}) == 3
    idx = TwoEcIndex(4)
    for e in FOUR_CYCLE_CHORDS:
        idx.insert_edge(*e)
    assert label_of(idx, 1) == label_of(idx, 3)
    assert len({label_of(idx, v) for v in (1, 2, 4)}) == 3


def _descendants(st, v):
    return {w for w in st.vertices if st.is_ancestor(v, w)}


def test_partition_and_scc_restriction():
    rng = random.Random(11)
    for _ in range(80):
        n = rng.randint(2, 10)
        g = random_strong_graph(n, rng.randint(0, 2 * n), rng)
        for side in (g, g.reverse()):
            st = compute_dominator_state(side, 1)
            graphs = build_auxiliary_graphs(st, side)
            assert sum(len(a.vertices) for a in graphs.values()) == n
            total = sum(len(a.ordinary_edges) + len(a.shortcut_edges) for a in graphs.values())
            assert total <= g.m
            reps = static_representatives(st, side)
            for e, t in reps.items():
                assert edge_rep(st, side, e) == t
            comps = components_of(st, side, reps)
            comp_of = {v: i for i, c in enumerate(comps) for v in c}
            for v in st.vertices:
                if v == 1 or not st.bridge[v]:
                    continue
                sub = _descendants(st, v)
                dv = {w for w in sub if st.root[w] == v}
                expected = set()
                for c in oracle_scc(side, sub):
                    part = frozenset(c) & dv
                    if part:
                        expected.add(part)
                got = {frozenset(w for w in dv if comp_of[w] == comp_of[u]) for u in dv}
                assert got == expected
