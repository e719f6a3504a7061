"""Auxiliary graphs of a bridge decomposition.

Every graph edge ``(a, b)`` inside a component is represented in the
auxiliary graph of ``r_b``: as itself when ``a`` lies in the same
decomposition tree, as a shortcut ``(a', b)`` when ``a`` hangs below it
(``a'`` = nearest ancestor of ``a`` in that tree), and not at all when the
edge is the bridge entering ``b``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .dominator import DominatorState, rep_tail
from .graph import strongly_connected_components


@dataclass
class AuxiliaryGraph:
    r: int
    vertices: list = field(default_factory=list)
    ordinary_edges: list = field(default_factory=list)   # (eid, a, b)
    shortcut_edges: list = field(default_factory=list)   # (eid, a', b); origin edge is eid


class Label(NamedTuple):
    r: int
    c: int
    r_rev: int
    c_rev: int


def nearest_ancestor_in(st: DominatorState, v: int, r: int) -> int:
    """Deepest ancestor of ``v`` whose decomposition root is ``r``."""
    return st.nearest_ancestor_in(v, r)


def edge_rep(st: DominatorState, side, eid: int):
    """Auxiliary tail of edge ``eid`` (head unchanged), or ``None``."""
    t = side.edge_tail[eid]
    h = side.edge_head[eid]
    inside = st.inside
    if not (inside[t] and inside[h]):
        return None
    return rep_tail(st, t, st.root[h])


def static_representatives(st: DominatorState, side) -> dict:
    """``eid -> auxiliary tail`` for all represented edges of the component,
    in one preorder pass over the dominator tree."""
    n = side.n
    pre, size = st.pre, st.size
    root = st.root
    inside = st.inside
    order = st.preorder()
    last = [0] * (n + 1)      # per root: deepest vertex of its tree on the current path
    on = [False] * (n + 1)
    stack: list = []          # (vertex, end of its preorder interval, saved last)
    out_adj, out_eid = side.out_adj, side.out_eid
    reps = {}
    for a in order:
        i = pre[a]
        while stack and stack[-1][1] <= i:
            v, _, saved = stack.pop()
            last[root[v]] = saved
            on[v] = False
        ra = root[a]
        stack.append((a, i + size[a], last[ra]))
        last[ra] = a
        on[a] = True
        for b, e in zip(out_adj[a], out_eid[a]):
            if not inside[b]:
                continue
            rb = root[b]
            if on[rb]:
                reps[e] = last[rb]
    return reps


def components_of(st: DominatorState, side, reps: dict) -> list:
    """SCCs of all auxiliary graphs of the side, topologically ordered."""
    n = side.n
    adj: list = [[] for _ in range(n + 1)]
    head = side.edge_head
    for e, t in reps.items():
        adj[t].append(head[e])
    return strongly_connected_components(st.vertices, adj.__getitem__, n)


def build_auxiliary_graphs(st: DominatorState, side) -> dict:
    """``root -> AuxiliaryGraph`` for every tree of the decomposition.
    Shortcuts that contract to a self-loop are left out."""
    graphs = {}
    root = st.root
    for v in st.vertices:
        r = root[v]
        ag = graphs.get(r)
        if ag is None:
            ag = graphs[r] = AuxiliaryGraph(r)
        ag.vertices.append(v)
    reps = static_representatives(st, side)
    for e in sorted(reps):
        t2 = reps[e]
        t, h = side.edge_tail[e], side.edge_head[e]
        ag = graphs[root[h]]
        if t2 == t:
            ag.ordinary_edges.append((e, t, h))
        elif t2 != h:
            ag.shortcut_edges.append((e, t2, h))
    return graphs


def label_of(index, v: int) -> Label:
    """Current ``(r, c, r_rev, c_rev)`` of ``v``; vertices outside any
    nontrivial strongly connected component get ``(v, v, v, v)``."""
    sid = index.top.setid[v]
    state = index.states.get(sid)
    if state is None:
        return Label(v, v, v, v)
    return Label(
        state.fwd.root[v],
        state.fwd_scc.find(v),
        state.rev.root[v],
        state.rev_scc.find(v),
    )
