"""Brute-force reference answers.

Everything here is deliberately naive and shares no code with the engine
beyond reading edges out of a graph.  Reachability uses Python ints as bit
sets, which keeps the deletion-based definitions affordable up to a few
hundred vertices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field


def _snapshot(g, vertices=None):
    """Vertex list and successor bitmasks of ``g`` (or ``g[vertices]``)."""
    if vertices is None:
        vs = list(range(1, g.n + 1))
    else:
        vs = sorted(set(vertices))
    keep = set(vs)
    out: dict[int, int] = {v: 0 for v in vs}
    edges = []
    for u, v in g.edges():
        if u in keep and v in keep and u != v:
            if not out[u] >> v & 1:
                edges.append((u, v))
            out[u] |= 1 << v
    return vs, out, edges


def _reach(out, src, cut_tail=-1, cut_head=-1):
    """Bitmask of vertices reachable from ``src``, optionally without the
    single edge ``(cut_tail, cut_head)``."""
    seen = 1 << src
    stack = [src]
    cut_mask = ~(1 << cut_head) if cut_head >= 0 else -1
    while stack:
        w = stack.pop()
        nb = out[w]
        if w == cut_tail:
            nb &= cut_mask
        new = nb & ~seen
        if new:
            seen |= new
            while new:
                low = new & -new
                stack.append(low.bit_length() - 1)
                new ^= low
    return seen


def _scc_ids(vs, out, cut_tail=-1, cut_head=-1):
    """SCC id per vertex (the smallest member) from all-pairs reachability."""
    fwd = {v: _reach(out, v, cut_tail, cut_head) for v in vs}
    comp = {}
    for v in vs:
        if v in comp:
            continue
        mates = [w for w in vs if fwd[v] >> w & 1 and fwd[w] >> v & 1]
        for w in mates:
            comp[w] = v
    return comp


def oracle_scc(g, vertices=None) -> list[list[int]]:
    vs, out, _ = _snapshot(g, vertices)
    comp = _scc_ids(vs, out)
    groups: dict[int, list[int]] = {}
    for v in vs:
        groups.setdefault(comp[v], []).append(v)
    return sorted(groups.values())


def oracle_strong_bridges(g) -> set[tuple[int, int]]:
    """Edges whose deletion increases the number of SCCs.

    Deleting an edge between two SCCs changes nothing, and deleting
    ``(u, v)`` inside an SCC splits it exactly when ``u`` no longer reaches
    ``v``; both facts follow from the definition, so only intra-SCC edges are
    probed.
    """
    vs, out, edges = _snapshot(g)
    comp = _scc_ids(vs, out)
    found = set()
    for u, v in edges:
        if comp[u] != comp[v]:
            continue
        if not _reach(out, u, u, v) >> v & 1:
            found.add((u, v))
    return found


def _bfs_reaches(adj, src, dst, skip):
    if src == dst:
        return True
    seen = {src}
    todo = deque([src])
    while todo:
        w = todo.popleft()
        for x in adj.get(w, ()):
            if (w, x) == skip or x in seen:
                continue
            if x == dst:
                return True
            seen.add(x)
            todo.append(x)
    return False


def oracle_two_ec(g, u: int, v: int) -> bool:
    """True iff ``u`` reaches ``v`` and ``v`` reaches ``u`` after deleting any
    single edge (plain BFS per deletion)."""
    if u == v:
        return True
    adj: dict[int, list[int]] = {}
    edges = list(g.edges())
    for a, b in edges:
        adj.setdefault(a, []).append(b)
    if not (_bfs_reaches(adj, u, v, None) and _bfs_reaches(adj, v, u, None)):
        return False
    for e in edges:
        if not _bfs_reaches(adj, u, v, e) or not _bfs_reaches(adj, v, u, e):
            return False
    return True


def reaches_without(g, src: int, dst: int, cut: tuple[int, int] | None) -> bool:
    """Whether ``src`` reaches ``dst`` in ``g`` minus the edge ``cut``."""
    _, out, _ = _snapshot(g)
    if cut is None:
        return bool(_reach(out, src) >> dst & 1)
    return bool(_reach(out, src, cut[0], cut[1]) >> dst & 1)


class OracleError(AssertionError):
    pass


def oracle_blocks(g) -> list[list[int]]:
    """2-edge-connected blocks, blocks ordered by minimum member.

    ``u ~ v`` iff they share an SCC of ``G`` and of every ``G - e``.  Only
    strong bridges can split an SCC, so ``G - e`` is examined for those.  The
    relation is checked to be transitive before it is turned into a
    partition.
    """
    vs, out, edges = _snapshot(g)
    base = _scc_ids(vs, out)
    cuts = []
    for u, v in edges:
        if base[u] == base[v] and not _reach(out, u, u, v) >> v & 1:
            cuts.append(_scc_ids(vs, out, u, v))
    sig = {v: (base[v],) + tuple(c[v] for c in cuts) for v in vs}
    rel: dict[int, int] = {}
    by_sig: dict[tuple, int] = {}
    for v in vs:
        by_sig[sig[v]] = by_sig.get(sig[v], 0) | 1 << v
    for v in vs:
        rel[v] = by_sig[sig[v]]
    for v in vs:
        for w in vs:
            if rel[v] >> w & 1 and rel[w] != rel[v]:
                raise OracleError(f"2EC relation not transitive at ({v}, {w})")
    blocks = {}
    for v in vs:
        blocks.setdefault(rel[v], []).append(v)
    return sorted(blocks.values())


def _dominator_masks(g, s, vertices):
    vs, out, _ = _snapshot(g, vertices)
    if s not in out:
        raise ValueError(f"start vertex {s} not in the graph")
    reach = _reach(out, s)
    missing = [v for v in vs if not reach >> v & 1]
    if missing:
        raise ValueError(f"vertices unreachable from {s}: {missing}")
    preds: dict[int, list[int]] = {v: [] for v in vs}
    for u in vs:
        m = out[u]
        while m:
            low = m & -m
            preds[low.bit_length() - 1].append(u)
            m ^= low
    full = 0
    for v in vs:
        full |= 1 << v
    dom = {v: full for v in vs}
    dom[s] = 1 << s
    changed = True
    while changed:
        changed = False
        for v in vs:
            if v == s:
                continue
            acc = full
            for p in preds[v]:
                acc &= dom[p]
            acc |= 1 << v
            if acc != dom[v]:
                dom[v] = acc
                changed = True
    return vs, out, dom


def oracle_dominator_sets(g, s: int, vertices=None) -> dict:
    """``v -> set of dominators of v`` (inclusive) rooted at ``s``."""
    _, _, dom = _dominator_masks(g, s, vertices)
    res = {}
    for v, m in dom.items():
        res[v] = {w for w in range(m.bit_length()) if m >> w & 1}
    return res


def oracle_dominator_tree(g, s: int, vertices=None):
    """Dominator parents and flow-graph bridges of ``g`` (or ``g[vertices]``)
    rooted at ``s``, by the set-intersection fixpoint.

    Returns ``(parent, bridges)`` where ``parent`` maps every ``v != s`` to
    its immediate dominator and ``bridges`` is the set of tree edges
    ``(d(v), v)`` whose deletion disconnects ``v`` from ``s``.
    """
    vs, out, dom = _dominator_masks(g, s, vertices)
    size = {v: bin(dom[v]).count("1") for v in vs}
    parent = {}
    for v in vs:
        if v == s:
            continue
        m = dom[v] & ~(1 << v)
        best = None
        while m:
            low = m & -m
            w = low.bit_length() - 1
            if size[w] == size[v] - 1:
                best = w
            m ^= low
        parent[v] = best
    bridges = set()
    for v, p in parent.items():
        if not _reach(out, s, p, v) >> v & 1:
            bridges.add((p, v))
    return parent, bridges


@dataclass
class OracleReport:
    """Reference facts about one graph.  ``dom`` maps ``"fwd"``/``"rev"`` to
    ``vertex -> dominator set``, each strongly connected component rooted at
    its smallest vertex."""

    strong_bridges: set = field(default_factory=set)
    blocks: list = field(default_factory=list)
    dom: dict = field(default_factory=dict)


def oracle_report(g) -> OracleReport:
    dom: dict = {"fwd": {}, "rev": {}}
    rg = g.reverse()
    for comp in oracle_scc(g):
        s = min(comp)
        dom["fwd"].update(oracle_dominator_sets(g, s, comp))
        dom["rev"].update(oracle_dominator_sets(rg, s, comp))
    return OracleReport(oracle_strong_bridges(g), oracle_blocks(g), dom)
