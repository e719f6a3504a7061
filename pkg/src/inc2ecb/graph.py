"""Mutable directed graph storage shared by every other module.

Vertices are the integers ``1..n`` and are fixed at construction.  Edges get
ids ``0, 1, 2, ...`` in insertion order.  Adjacency is kept as parallel lists
(neighbour, edge id) so the hot loops of the engine can iterate them without
unpacking tuples.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class Digraph:
    """Directed graph without self-loops or parallel edges.

    ``out_adj[v]`` / ``out_eid[v]`` hold the heads and ids of edges leaving
    ``v``; ``in_adj[v]`` / ``in_eid[v]`` the tails and ids of edges entering it.
    Index 0 of every per-vertex list is unused.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={n}")
        self.n = n
        self.out_adj: list[list[int]] = [[] for _ in range(n + 1)]
        self.out_eid: list[list[int]] = [[] for _ in range(n + 1)]
        self.in_adj: list[list[int]] = [[] for _ in range(n + 1)]
        self.in_eid: list[list[int]] = [[] for _ in range(n + 1)]
        self.edge_tail: list[int] = []
        self.edge_head: list[int] = []
        self._pairs: dict[tuple[int, int], int] = {}

    @property
    def m(self) -> int:
        return len(self.edge_tail)

    def _check(self, v: int) -> None:
        if not (isinstance(v, int) and 1 <= v <= self.n):
            raise ValueError(f"vertex {v!r} out of range 1..{self.n}")

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._pairs

    def edge_id(self, u: int, v: int) -> int | None:
        return self._pairs.get((u, v))

    def add_edge(self, u: int, v: int) -> int | None:
        """Insert ``(u, v)`` and return its id, or ``None`` for a self-loop or
        an edge that is already present (the graph is left unchanged)."""
        self._check(u)
        self._check(v)
        if u == v or (u, v) in self._pairs:
            return None
        eid = len(self.edge_tail)
        self._pairs[(u, v)] = eid
        self.edge_tail.append(u)
        self.edge_head.append(v)
        self.out_adj[u].append(v)
        self.out_eid[u].append(eid)
        self.in_adj[v].append(u)
        self.in_eid[v].append(eid)
        return eid

    def edges(self) -> Iterator[tuple[int, int]]:
        return zip(self.edge_tail, self.edge_head)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def reverse(self) -> "ReverseView":
        return ReverseView(self)

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Digraph", dict[int, int]]:
        """Copy of ``G[S]`` relabelled to ``1..|S|`` (in ascending id order),
        together with the relabelling map ``old -> new``."""
        keep = sorted(set(vertices))
        for v in keep:
            self._check(v)
        if not keep:
            raise ValueError("induced subgraph of an empty vertex set")
        relabel = {v: i for i, v in enumerate(keep, start=1)}
        sub = Digraph(len(keep))
        for u, v in self.edges():
            if u in relabel and v in relabel:
                sub.add_edge(relabel[u], relabel[v])
        return sub, relabel

    def copy(self) -> "Digraph":
        g = Digraph(self.n)
        for u, v in self.edges():
            g.add_edge(u, v)
        return g

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


class ReverseView:
    """``G^R`` as a view over the same storage: out and in roles swapped.

    Insertions made through the underlying graph are visible here at once.
    """

    def __init__(self, g: Digraph):
        self.base = g

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def m(self) -> int:
        return self.base.m

    @property
    def out_adj(self) -> list[list[int]]:
        return self.base.in_adj

    @property
    def out_eid(self) -> list[list[int]]:
        return self.base.in_eid

    @property
    def in_adj(self) -> list[list[int]]:
        return self.base.out_adj

    @property
    def in_eid(self) -> list[list[int]]:
        return self.base.out_eid

    @property
    def edge_tail(self) -> list[int]:
        return self.base.edge_head

    @property
    def edge_head(self) -> list[int]:
        return self.base.edge_tail

    def has_edge(self, u: int, v: int) -> bool:
        return self.base.has_edge(v, u)

    def edges(self) -> Iterator[tuple[int, int]]:
        return zip(self.base.edge_head, self.base.edge_tail)

    def vertices(self) -> range:
        return self.base.vertices()

    def reverse(self) -> Digraph:
        return self.base


def new_graph(n: int) -> Digraph:
    return Digraph(n)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Digraph:
    g = Digraph(n)
    for u, v in edges:
        g.add_edge(u, v)
    return g


def strongly_connected_components(vertices, succ, n: int | None = None) -> list[list[int]]:
    """Iterative Tarjan.  ``succ(v)`` yields successors (those outside
    ``vertices`` must not be yielded).  Components come out in topological
    order of the condensation, sources first.  Passing ``n`` (largest vertex
    id) switches bookkeeping from dicts to flat lists."""
    if n is None:
        index: dict | list = {}
        low: dict | list = {}

        def fresh(v):
            return v not in index
    else:
        index = [-1] * (n + 1)
        low = [0] * (n + 1)

        def fresh(v):
            return index[v] < 0
    onstack: set[int] = set()
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in vertices:
        if not fresh(root):
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        onstack.add(root)
        work = [(root, iter(succ(root)))]
        while work:
            v, it = work[-1]
            for w in it:
                if fresh(w):
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    onstack.add(w)
                    work.append((w, iter(succ(w))))
                    break
                if w in onstack and index[w] < low[v]:
                    low[v] = index[w]
            else:
                work.pop()
                if work:
                    u = work[-1][0]
                    if low[v] < low[u]:
                        low[u] = low[v]
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        onstack.discard(w)
                        comp.append(w)
                        if w == v:
                            break
                    comps.append(comp)
    comps.reverse()
    return comps
