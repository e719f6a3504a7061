import random

import pytest

from helpers import BI_TRIANGLE, FOUR_CYCLE, FOUR_CYCLE_CHORDS, THREE_CYCLE, random_strong_graph
from inc2ecb.graph import from_edges, new_graph
from inc2ecb.oracle import (
    oracle_blocks,
    oracle_dominator_tree,
    oracle_report,
    oracle_strong_bridges,
    oracle_two_ec,
    reaches_without,
)


def test_strong_bridges_examples():
    assert oracle_strong_bridges(from_edges(3, THREE_CYCLE)) == set(THREE_CYCLE)
    assert oracle_strong_bridges(from_edges(3, BI_TRIANGLE)) == set()
    assert oracle_strong_bridges(from_edges(4, FOUR_CYCLE_CHORDS)) == set(FOUR_CYCLE)


def test_two_ec_examples():
    assert oracle_two_ec(from_edges(3, BI_TRIANGLE), 1, 3)
    assert not oracle_two_ec(from_edges(3, THREE_CYCLE), 1, 3)
    assert not oracle_two_ec(from_edges(3, [(1, 2), (2, 1)] * 1 + [(2, 3)]), 1, 3)


def test_blocks_examples():
    assert oracle_blocks(from_edges(3, BI_TRIANGLE)) == [[1, 2, 3]]
    assert oracle_blocks(from_edges(4, FOUR_CYCLE_CHORDS)) == [[1, 3], [2], [4]]
    assert oracle_blocks(new_graph(1)) == [[1]]
    assert oracle_blocks(new_graph(3)) == [[1], [2], [3]]


def test_dominator_examples():
    assert oracle_dominator_tree(from_edges(3, THREE_CYCLE), 1)[0] == {2: 1, 3: 2}
    par, br = oracle_dominator_tree(from_edges(3, BI_TRIANGLE), 1)
    assert par == {2: 1, 3: 1} and br == set()
    par, br = oracle_dominator_tree(from_edges(4, FOUR_CYCLE + [(1, 3)]), 1)
    assert par == {2: 1, 3: 1, 4: 3} and br == {(1, 2), (3, 4)}


def test_dominator_unreachable():
    with pytest.raises(ValueError):
        oracle_dominator_tree(from_edges(3, [(1, 2)]), 1)


def _menger_two_ec(g, u, v):
    # two edge-disjoint paths each way <=> max flow >= 2 with unit capacities
    def flow(a, b):
        cap = {}
        for x, y in g.edges():
            cap[(x, y)] = cap.get((x, y), 0) + 1
            cap.setdefault((y, x), 0)
        total = 0
        while total < 2:
            prev = {a: None}
            queue = [a]
            while queue and b not in prev:
                x = queue.pop(0)
                for (p, q), c in cap.items():
                    if p == x and c > 0 and q not in prev:
                        prev[q] = x
                        queue.append(q)
            if b not in prev:
                break
            y = b
            while prev[y] is not None:
                x = prev[y]
                cap[(x, y)] -= 1
                cap[(y, x)] += 1
                y = x
            total += 1
        return total
    return flow(u, v) >= 2 and flow(v, u) >= 2


def test_two_ec_matches_menger_formulation():
    rng = random.Random(4)
    for _ in range(60):
        n = rng.randint(2, 8)
        g = from_edges(n, [(rng.randint(1, n), rng.randint(1, n)) for _ in range(rng.randint(0, 3 * n))])
        for u in range(1, n + 1):
            for v in range(u + 1, n + 1):
                assert oracle_two_ec(g, u, v) == _menger_two_ec(g, u, v)


def test_cross_oracle_bridge_consistency():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(2, 9)
        g = random_strong_graph(n, rng.randint(0, 2 * n), rng)
        sb = oracle_strong_bridges(g)
        assert len(sb) <= 2 * (n - 1)
        s = rng.randint(1, n)
        _, fwd = oracle_dominator_tree(g, s)
        _, rev = oracle_dominator_tree(g.reverse(), s)
        assert sb == fwd | {(b, a) for a, b in rev}


def _reaches_avoiding(g, s, t, banned):
    seen, stack = {s}, [s]
    while stack:
        x = stack.pop()
        for y in g.out_adj[x]:
            if y != banned and y not in seen:
                seen.add(y)
                stack.append(y)
    return t in seen


def test_report_dominator_sets_and_blocks():
    rng = random.Random(2)
    for _ in range(15):
        g = random_strong_graph(7, rng.randint(0, 8), rng)
        rep = oracle_report(g)
        s = 1
        for v, doms in rep.dom["fwd"].items():
            for w in g.vertices():
                if w in (s, v):
                    assert w in doms
                else:
                    assert (w in doms) == (not _reaches_avoiding(g, s, v, w))
        # blocks refine strong connectivity; separated pairs are cut by one strong bridge
        block_of = {v: i for i, b in enumerate(rep.blocks) for v in b}
        for u in g.vertices():
            for v in g.vertices():
                if u < v and block_of[u] != block_of[v]:
                    assert any(not reaches_without(g, u, v, e) or not reaches_without(g, v, u, e)
                               for e in rep.strong_bridges)
