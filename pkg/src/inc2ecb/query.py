"""Pairwise 2-edge-connectivity queries with separating-edge witnesses."""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import TwoEcIndex, blocks_snapshot

SEPARATING_EDGE = "separating-edge"
NOT_STRONGLY_CONNECTED = "not-strongly-connected"


@dataclass(frozen=True)
class Witness:
    kind: str
    edge: tuple | None = None


def are_two_edge_connected(index: TwoEcIndex, u: int, v: int) -> bool:
    """Constant-time test: equal top-level set, then equal roots and
    auxiliary sets on both sides."""
    if u == v:
        return True
    top = index.top.setid
    t = top[u]
    if t != top[v]:
        return False
    st = index.states[t]
    fr = st.fwd.root
    if fr[u] != fr[v]:
        return False
    fs = st.fwd_scc.setid
    if fs[u] != fs[v]:
        return False
    rr = st.rev.root
    if rr[u] != rr[v]:
        return False
    rs = st.rev_scc.setid
    return rs[u] == rs[v]


def _side_witness(dom, scc, u, v):
    """Bridge ``(d(r), r)`` of one side separating ``u`` and ``v``, or
    ``None`` if this side does not tell them apart."""
    root, parent = dom.root, dom.parent
    ru, rv = root[u], root[v]
    if ru != rv:
        # pick the root that is not an ancestor of the other (r_v on ties)
        r = ru if dom.is_ancestor(rv, ru) else rv
        return parent[r], r
    if scc.setid[u] != scc.setid[v]:
        return parent[ru], ru
    return None


def separating_edge(index: TwoEcIndex, u: int, v: int) -> Witness:
    """Witness for a pair that is not 2-edge-connected.  Raises
    ``ValueError`` for 2-edge-connected pairs."""
    top = index.top.setid
    if top[u] != top[v]:
        return Witness(NOT_STRONGLY_CONNECTED)
    if u == v or are_two_edge_connected(index, u, v):
        raise ValueError(f"{u} and {v} are 2-edge-connected")
    st = index.states[top[u]]
    e = _side_witness(st.fwd, st.fwd_scc, u, v)
    if e is not None:
        return Witness(SEPARATING_EDGE, e)
    a, b = _side_witness(st.rev, st.rev_scc, u, v)
    return Witness(SEPARATING_EDGE, (b, a))


def report_blocks(index: TwoEcIndex) -> list:
    return blocks_snapshot(index)
