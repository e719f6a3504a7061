"""Shared helpers for the test suite."""

import random

from inc2ecb.graph import Digraph, from_edges

THREE_CYCLE = [(1, 2), (2, 3), (3, 1)]
BI_TRIANGLE = [(1, 2), (2, 1), (2, 3), (3, 2), (1, 3), (3, 1)]
FOUR_CYCLE = [(1, 2), (2, 3), (3, 4), (4, 1)]
FOUR_CYCLE_CHORDS = FOUR_CYCLE + [(1, 3), (3, 1)]


def all_pairs(n):
    return [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v]


def random_order(n, rng):
    pairs = all_pairs(n)
    rng.shuffle(pairs)
    return pairs


def random_strong_graph(n, extra, rng) -> Digraph:
    """Hamiltonian cycle over a random permutation plus random chords."""
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    g = from_edges(n, [(perm[i], perm[(i + 1) % n]) for i in range(n)] if n > 1 else [])
    for _ in range(extra):
        g.add_edge(rng.randint(1, n), rng.randint(1, n))
    return g


def partition_of(blocks):
    return sorted(sorted(b) for b in blocks)


__all__ = ["random", "THREE_CYCLE", "BI_TRIANGLE", "FOUR_CYCLE", "FOUR_CYCLE_CHORDS",
           "all_pairs", "random_order", "random_strong_graph", "partition_of"]
