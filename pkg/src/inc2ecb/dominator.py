"""Dominator trees, flow-graph bridges and the bridge decomposition for one
side (``G_s`` or ``G_s^R``) of a strongly connected component, with
incremental maintenance under edge insertion.

A side is any object exposing ``n``, ``out_adj`` and ``in_adj`` (a
:class:`~inc2ecb.graph.Digraph` or its reverse view).  The component is given
by a membership list ``inside``; edges leaving it are ignored.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field


@dataclass
class InsertionReport:
    """What one insertion did to a dominator tree.

    ``scanned`` holds the affected vertices and all their (pre-insertion)
    descendants, sorted by old depth; ``old_root`` and ``old_depth`` record
    their values before the update.
    """

    z: int = 0
    scanned: list = field(default_factory=list)
    affected: list = field(default_factory=list)
    canceled_bridges: list = field(default_factory=list)
    locally_canceled: bool = False
    old_root: dict = field(default_factory=dict)
    old_parent: dict = field(default_factory=dict)

    @property
    def empty(self) -> bool:
        return not self.scanned and not self.canceled_bridges


def _full_membership(n):
    inside = [True] * (n + 1)
    inside[0] = False
    return inside


def _postorder(out_adj, inside, s, n):
    """Iterative DFS from ``s``; returns vertices in postorder."""
    seen = [False] * (n + 1)
    seen[s] = True
    order = []
    stack = [(s, iter(out_adj[s]))]
    while stack:
        v, it = stack[-1]
        for w in it:
            if inside[w] and not seen[w]:
                seen[w] = True
                stack.append((w, iter(out_adj[w])))
                break
        else:
            stack.pop()
            order.append(v)
    return order


def idoms_iterative(side, s, inside):
    """Immediate dominators by the iterative intersection scheme on reverse
    postorder.  Returns ``(idom, postorder)``; ``idom[s] == s`` and
    unreachable vertices keep ``0``."""
    n = side.n
    in_adj = side.in_adj
    order = _postorder(side.out_adj, inside, s, n)
    num = [-1] * (n + 1)
    for i, v in enumerate(order):
        num[v] = i
    # work on postorder numbers: ancestors carry larger numbers
    top = len(order) - 1
    preds = [[num[p] for p in in_adj[v] if num[p] >= 0] for v in order]
    doms = [-1] * (top + 1)
    doms[top] = top
    changed = True
    while changed:
        changed = False
        for i in range(top - 1, -1, -1):
            new = -1
            for a in preds[i]:
                if doms[a] < 0:
                    continue
                if new < 0:
                    new = a
                    continue
                b = new
                while a != b:
                    while a < b:
                        a = doms[a]
                    while b < a:
                        b = doms[b]
                new = a
            if doms[i] != new:
                doms[i] = new
                changed = True
    idom = [0] * (n + 1)
    for i, v in enumerate(order):
        idom[v] = order[doms[i]]
    return idom, order


def idoms_lengauer_tarjan(side, s, inside):
    """Immediate dominators via semidominators (simple path-compression
    variant).  Same return convention as :func:`idoms_iterative`."""
    n = side.n
    out_adj, in_adj = side.out_adj, side.in_adj
    dfnum = [0] * (n + 1)
    vertex = [0]
    parent = [0] * (n + 1)
    stack = [(s, 0)]
    while stack:
        v, p = stack.pop()
        if dfnum[v]:
            continue
        vertex.append(v)
        dfnum[v] = len(vertex) - 1
        parent[v] = p
        for w in reversed(out_adj[v]):
            if inside[w] and not dfnum[w]:
                stack.append((w, v))
    semi = dfnum[:]
    ancestor = [0] * (n + 1)
    label = list(range(n + 1))
    bucket: list[list[int]] = [[] for _ in range(n + 1)]
    idom = [0] * (n + 1)

    def evaluate(v):
        if not ancestor[v]:
            return v
        path = []
        u = v
        while ancestor[ancestor[u]]:
            path.append(u)
            u = ancestor[u]
        for u in reversed(path):
            a = ancestor[u]
            if semi[label[a]] < semi[label[u]]:
                label[u] = label[a]
            ancestor[u] = ancestor[a]
        return label[v]

    for i in range(len(vertex) - 1, 1, -1):
        w = vertex[i]
        for v in in_adj[w]:
            if not dfnum[v]:
                continue
            u = evaluate(v)
            if semi[u] < semi[w]:
                semi[w] = semi[u]
        bucket[vertex[semi[w]]].append(w)
        p = parent[w]
        ancestor[w] = p
        for v in bucket[p]:
            u = evaluate(v)
            idom[v] = u if semi[u] < semi[v] else p
        bucket[p].clear()
    for i in range(2, len(vertex)):
        w = vertex[i]
        if idom[w] != vertex[semi[w]]:
            idom[w] = idom[idom[w]]
    idom[s] = s
    order = vertex[1:]
    return idom, order[::-1]


class DominatorState:
    """Dominator tree ``D`` of one flow-graph side plus its bridge
    decomposition.

    Arrays are indexed by vertex id; entries of vertices outside the
    component are meaningless.  ``parent[s] == 0``.  ``pre``/``size`` are
    derived lazily and go stale after an insertion until next requested.
    """

    def __init__(self, side, s, vertices, inside, parent, depth, bridge, root):
        self.side = side
        self.s = s
        self.vertices = vertices
        self.inside = inside
        self.parent = parent
        self.depth = depth
        self.bridge = bridge
        self.root = root
        self._pre = None
        self._size = None

    # -- tree queries -------------------------------------------------
    def _number(self):
        n = self.side.n
        children: list[list[int]] = [[] for _ in range(n + 1)]
        parent = self.parent
        for v in self.vertices:
            if v != self.s:
                children[parent[v]].append(v)
        pre = [-1] * (n + 1)
        size = [1] * (n + 1)
        order = []
        stack = [self.s]
        while stack:
            v = stack.pop()
            pre[v] = len(order)
            order.append(v)
            stack.extend(reversed(children[v]))
        for v in reversed(order):
            if v != self.s:
                size[parent[v]] += size[v]
        self._pre, self._size = pre, size
        return order

    @property
    def pre(self):
        if self._pre is None:
            self._number()
        return self._pre

    @property
    def size(self):
        if self._size is None:
            self._number()
        return self._size

    def preorder(self):
        return self._number()

    def is_ancestor(self, u, v) -> bool:
        """Whether ``u`` is an ancestor of ``v`` (inclusive)."""
        pre, size = self.pre, self.size
        return pre[u] <= pre[v] < pre[u] + size[u]

    def nca(self, u, v) -> int:
        depth, parent = self.depth, self.parent
        while depth[u] > depth[v]:
            u = parent[u]
        while depth[v] > depth[u]:
            v = parent[v]
        while u != v:
            u = parent[u]
            v = parent[v]
        return u

    def nearest_ancestor_in(self, v, r) -> int:
        """Deepest ancestor of ``v`` lying in the decomposition tree rooted at
        ``r``.  Raises ``ValueError`` if ``r`` is not an ancestor of ``v``."""
        u = rep_tail(self, v, r)
        if u is None:
            raise ValueError(f"{r} is not an ancestor of {v}")
        return u

    def bridges(self):
        """Bridges ``(d(v), v)`` of this flow graph, in vertex order."""
        return [(self.parent[v], v) for v in self.vertices if self.bridge[v]]

    def dump(self) -> str:
        lines = []
        for v in self.vertices:
            p = self.parent[v] if v != self.s else "-"
            lines.append(f"{v} {p} {self.depth[v]} {self.root[v]} {int(self.bridge[v])}")
        return "\n".join(lines)

    def snapshot(self):
        """Comparable view: parents, depths, bridge flags and roots."""
        vs = self.vertices
        return (
            {v: self.parent[v] for v in vs},
            {v: self.depth[v] for v in vs},
            {v: bool(self.bridge[v]) for v in vs},
            {v: self.root[v] for v in vs},
        )

    # -- incremental update --------------------------------------------
    def apply_insertion(self, x, y) -> InsertionReport:
        """Update the state for the already-recorded edge ``(x, y)``.

        When a bridge is locally canceled the state is rebuilt from scratch
        (the caller reinitializes its auxiliary structures in that case).
        """
        s = self.s
        if y == s or x == y:
            return InsertionReport(z=y if y == s else x)
        depth, parent, bridge, root = self.depth, self.parent, self.bridge, self.root
        inside = self.inside
        out_adj = self.side.out_adj
        z = self.nca(x, y)
        report = InsertionReport(z=z)
        dz = depth[z]
        lo = dz + 1
        if depth[y] < lo:
            return report
        # b[w]: best over paths from y of the minimum depth along the path.
        b = {y: depth[y]}
        done = set()
        heap = [(-depth[y], y)]
        scanned = []
        visited_low = []
        while heap:
            nb, v = heapq.heappop(heap)
            if v in done:
                continue
            done.add(v)
            bv = -nb
            if depth[v] > lo:
                scanned.append(v)
                for w in out_adj[v]:
                    if not inside[w]:
                        continue
                    dw = depth[w]
                    cand = bv if bv < dw else dw
                    if cand >= lo and cand > b.get(w, -1):
                        b[w] = cand
                        heapq.heappush(heap, (-cand, w))
            else:
                visited_low.append(v)
        affected = [v for v in scanned if b[v] == depth[v]]
        canceled = [(parent[v], v) for v in affected if bridge[v]]
        local = [(parent[v], v) for v in visited_low if bridge[v]]
        canceled.extend(local)
        report.affected = affected
        report.canceled_bridges = canceled
        if local:
            report.locally_canceled = True
            report.scanned = sorted(scanned, key=depth.__getitem__)
            fresh = compute_dominator_state(self.side, s, self.vertices, inside)
            self.__dict__.update(fresh.__dict__)
            return report
        if not affected:
            return report
        scanned.sort(key=depth.__getitem__)
        report.scanned = scanned
        old_root = report.old_root
        old_parent = report.old_parent
        for v in scanned:
            old_root[v] = root[v]
        for v in affected:
            old_parent[v] = parent[v]
            parent[v] = z
            bridge[v] = False
        aff = set(affected)
        rz = root[z]
        dz1 = dz + 1
        for w in scanned:
            if w in aff:
                depth[w] = dz1
                root[w] = rz
            else:
                p = parent[w]
                depth[w] = depth[p] + 1
                root[w] = w if bridge[w] else root[p]
        self._pre = self._size = None
        return report


def rep_tail(st: DominatorState, v, r):
    """Nearest ancestor of ``v`` in the decomposition tree of root ``r``, or
    ``None`` when ``v`` is not a descendant of ``r``.  Jumps one
    decomposition tree at a time."""
    root, depth, parent = st.root, st.depth, st.parent
    dr = depth[r]
    rv = root[v]
    while rv != r:
        if depth[rv] <= dr:
            return None
        v = parent[rv]
        rv = root[v]
    return v


def compute_dominator_state(side, s, vertices=None, inside=None, method="iterative"):
    """Dominator tree, bridges and bridge decomposition of ``side`` restricted
    to ``vertices`` (default: all), rooted at ``s``.

    Raises ``ValueError`` if some vertex is unreachable from ``s``.
    """
    n = side.n
    if vertices is None:
        vertices = list(range(1, n + 1))
    if inside is None:
        if len(vertices) == n:
            inside = _full_membership(n)
        else:
            inside = [False] * (n + 1)
            for v in vertices:
                inside[v] = True
    if not inside[s]:
        raise ValueError(f"start vertex {s} is not in the component")
    if method == "iterative":
        idom, order = idoms_iterative(side, s, inside)
    elif method == "lt":
        idom, order = idoms_lengauer_tarjan(side, s, inside)
    else:
        raise ValueError(f"unknown dominator method {method!r}")
    if len(order) != len(vertices):
        reached = set(order)
        missing = [v for v in vertices if v not in reached]
        raise ValueError(f"vertices unreachable from {s}: {missing[:10]}")
    parent = idom
    parent[s] = 0
    depth = [0] * (n + 1)
    root = [0] * (n + 1)
    bridge = [False] * (n + 1)
    st = DominatorState(side, s, vertices, inside, parent, depth, bridge, root)
    pre_order = st._number()
    pre, size = st._pre, st._size
    in_adj = side.in_adj
    for v in pre_order:
        if v == s:
            root[v] = s
            continue
        p = parent[v]
        depth[v] = depth[p] + 1
        lo_ = pre[v]
        hi_ = lo_ + size[v]
        is_bridge = True
        for u in in_adj[v]:
            if u != p and inside[u] and not (lo_ <= pre[u] < hi_):
                is_bridge = False
                break
        bridge[v] = is_bridge
        root[v] = v if is_bridge else root[p]
    return st
