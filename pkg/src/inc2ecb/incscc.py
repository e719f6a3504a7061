"""Incremental strongly connected components over a set of disjoint graphs.

One :class:`IncScc` holds every auxiliary graph of one flow-graph side (or the
single top-level condensation).  Vertices live in sets; each set has a
canonical vertex and a set id (the id never changes while the set lives, the
canonical vertex may).  Edges are registered by an external edge id together
with their current tail/head; re-linking an edge bumps its version so stale
list entries are skipped and purged lazily.

Two engines are available:

``oneway``
    topological order kept as a linked list per group with gapped integer
    labels; an edge against the order triggers a forward search bounded by the
    tail's label.
``twoway``
    pseudo-topological levels; a backward search over same-level in-lists
    bounded by ``delta`` traversals, then a forward search that raises levels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

GAP = 1 << 30


@dataclass
class MergeReport:
    canonical: int = 0
    merged: list = field(default_factory=list)   # old canonical vertices

    def __bool__(self):
        return bool(self.merged)


def delta_for(n_hint: int, m_hint: int) -> int:
    """Backward-search budget ``ceil(min(m^(1/2), n^(2/3)))``, at least 1."""
    n_hint = max(1, n_hint)
    m_hint = max(1, m_hint)
    return max(1, math.ceil(min(math.sqrt(m_hint), n_hint ** (2.0 / 3.0))))


class IncScc:
    def __init__(self, n: int, engine: str = "oneway", delta: int = 1, choose=None):
        if engine not in ("oneway", "twoway"):
            raise ValueError(f"unknown engine {engine!r}")
        self.engine = engine
        self.oneway = engine == "oneway"
        self.delta = delta
        # choose(list of set ids) -> set id whose canonical vertex survives a
        # search-discovered merge; default: smallest label / smallest canonical.
        self.choose = choose
        size = n + 1
        self.setid = [0] * size
        self.canon = [0] * size
        self.members: list = [None] * size
        self.out: list = [None] * size
        self.inl: list = [None] * size
        self.live = [False] * size
        self.lab = [0] * size
        self.nxt = [0] * size
        self.prv = [0] * size
        self.grp = [0] * size
        self.lvl = [0] * size
        self.head: dict = {}
        self.tail: dict = {}
        self.etail: dict = {}
        self.ehead: dict = {}
        self.ever: dict = {}
        self._version = 0
        self.searches = 0
        self.traversals = 0
        self.unites = 0
        self.relabels = 0

    # -- sets --------------------------------------------------------------
    def find(self, v: int) -> int:
        return self.canon[self.setid[v]]

    def members_of(self, c: int) -> list:
        return self.members[self.setid[c]]

    def add_set(self, vertices, group=0, canonical=None, level=1) -> int:
        """Create a set at the end of ``group``'s order.  The set id is the
        canonical vertex (default: minimum member)."""
        vertices = list(vertices)
        c = min(vertices) if canonical is None else canonical
        setid = self.setid
        for v in vertices:
            setid[v] = c
        self.canon[c] = c
        self.members[c] = vertices
        self.out[c] = []
        self.inl[c] = []
        self.lvl[c] = level
        self.grp[c] = group
        if self.oneway:
            t = self.tail.get(group, 0)
            self._link_after(c, t, group)
            self.lab[c] = (self.lab[t] + GAP) if t else GAP
        else:
            self.live[c] = True
        return c

    def _link_after(self, sid, anchor, group):
        """Splice ``sid`` into ``group``'s list after ``anchor`` (0 = front)."""
        if anchor:
            nx = self.nxt[anchor]
            self.nxt[anchor] = sid
        else:
            nx = self.head.get(group, 0)
            self.head[group] = sid
        self.prv[sid] = anchor
        self.nxt[sid] = nx
        if nx:
            self.prv[nx] = sid
        else:
            self.tail[group] = sid
        self.grp[sid] = group
        self.live[sid] = True

    def _unlink(self, sid):
        g = self.grp[sid]
        p, q = self.prv[sid], self.nxt[sid]
        if p:
            self.nxt[p] = q
        else:
            self.head[g] = q
        if q:
            self.prv[q] = p
        else:
            self.tail[g] = p
        self.prv[sid] = self.nxt[sid] = 0
        self.live[sid] = False

    def rebuild_ranks(self, group=0, spacing: int = 1):
        """Renumber ``group``'s list ``spacing, 2*spacing, ...``."""
        self.relabels += 1
        lab, nxt = self.lab, self.nxt
        sid = self.head.get(group, 0)
        i = spacing
        while sid:
            lab[sid] = i
            i += spacing
            sid = nxt[sid]

    def order(self, group=0) -> list:
        """Canonical vertices of ``group`` in list order (one-way engine)."""
        res = []
        sid = self.head.get(group, 0)
        while sid:
            res.append(self.canon[sid])
            sid = self.nxt[sid]
        return res

    def rank(self, c: int) -> int:
        return self.lab[self.setid[c]]

    def level(self, c: int) -> int:
        return self.lvl[self.setid[c]]

    def _place_after(self, anchor, sids):
        """Put ``sids`` (not in any list) right after ``anchor`` in order."""
        if not sids:
            return
        g = self.grp[anchor]
        lab = self.lab
        nx = self.nxt[anchor]
        k = len(sids)
        lo = lab[anchor]
        hi = lab[nx] if nx else lo + GAP * (k + 1)
        if hi - lo <= k:
            self.rebuild_ranks(g, GAP)
            lo = lab[anchor]
            hi = lab[nx] if nx else lo + GAP * (k + 1)
        step = (hi - lo) // (k + 1)
        prev = anchor
        for i, sid in enumerate(sids, 1):
            self._link_after(sid, prev, g)
            lab[sid] = lo + step * i
            prev = sid

    def evict(self, c: int):
        """Take the set of canonical ``c`` out of its group's order."""
        sid = self.setid[c]
        if not self.live[sid]:
            raise AssertionError(f"set of {c} is not live")
        if self.oneway:
            self._unlink(sid)
        else:
            self.live[sid] = False
        self.out[sid] = []
        self.inl[sid] = []

    def admit_after(self, c: int, anchor: int):
        """Place the evicted set of ``c`` right after the set of ``anchor``;
        it inherits the anchor's group and level."""
        sid = self.setid[c]
        if self.live[sid]:
            raise AssertionError(f"set of {c} is already live")
        a = self.setid[anchor]
        self.lvl[sid] = self.lvl[a]
        self.grp[sid] = self.grp[a]
        if self.oneway:
            self._place_after(a, [sid])
        else:
            self.live[sid] = True

    def unite(self, p: int, q: int) -> int:
        """Merge the sets of canonicals ``p`` and ``q``; ``p`` stays canonical
        and keeps its position/level."""
        if self.canon[self.setid[p]] != p or self.canon[self.setid[q]] != q:
            raise AssertionError("unite needs canonical vertices")
        sp, sq = self.setid[p], self.setid[q]
        if sp == sq:
            return p
        self._merge([sp, sq], p, sp)
        return p

    def _merge(self, sids, canonical, pos):
        """Merge set ids ``sids`` into one set with ``canonical``; the result
        takes over the order position, level and group of set ``pos``."""
        self.unites += len(sids) - 1
        members = self.members
        phys = max(sids, key=lambda t: (len(members[t]), t == pos))
        live = self.live
        if self.oneway:
            for t in sids:
                if t != pos and live[t]:
                    self._unlink(t)
        else:
            for t in sids:
                if t != pos:
                    live[t] = False
        if phys != pos:
            self.lvl[phys] = self.lvl[pos]
            self.grp[phys] = self.grp[pos]
            self.lab[phys] = self.lab[pos]
            if live[pos]:
                if self.oneway:
                    anchor = self.prv[pos]
                    g = self.grp[pos]
                    self._unlink(pos)
                    self._link_after(phys, anchor, g)
                else:
                    live[pos] = False
                    live[phys] = True
        setid = self.setid
        keep_m = members[phys]
        out, inl = self.out, self.inl
        for t in sids:
            if t == phys:
                continue
            ms = members[t]
            for v in ms:
                setid[v] = phys
            keep_m.extend(ms)
            members[t] = None
            for lists in (out, inl):
                a, b = lists[phys], lists[t]
                if len(b) > len(a):
                    a, b = b, a
                a.extend(b)
                lists[phys] = a
                lists[t] = None
        self.canon[phys] = canonical
        return phys

    # -- edges -------------------------------------------------------------
    def _register(self, eid, t, h):
        self._version += 1
        ver = self._version
        self.etail[eid] = t
        self.ehead[eid] = h
        self.ever[eid] = ver
        return ver

    def unlink(self, eid):
        if eid in self.ever:
            del self.ever[eid]
            del self.etail[eid]
            del self.ehead[eid]

    def tail_of(self, eid):
        return self.etail.get(eid)

    def record(self, eid, t, h):
        """Register an edge known to respect the current order (bulk init)."""
        ver = self._register(eid, t, h)
        a, b = self.setid[t], self.setid[h]
        if a != b:
            self.out[a].append((eid, ver))
            if not self.oneway and self.lvl[a] == self.lvl[b]:
                self.inl[b].append((eid, ver))

    def link(self, eid, t, h) -> MergeReport:
        """Register edge ``eid`` as ``(t, h)`` and restore order, merging sets
        on a new cycle."""
        ver = self._register(eid, t, h)
        if self.oneway:
            return self._insert_oneway(eid, ver, t, h)
        return self._insert_twoway(eid, ver, t, h)

    def _scan(self, sid):
        """Valid out entries of ``sid`` as ``(entry, head set)``; purges stale
        entries and loops."""
        ever, ehead, setid = self.ever, self.ehead, self.setid
        kept = []
        res = []
        for ent in self.out[sid]:
            e, ver = ent
            if ever.get(e) != ver:
                continue
            hs = setid[ehead[e]]
            if hs == sid:
                continue
            kept.append(ent)
            res.append((ent, hs))
        self.out[sid] = kept
        self.traversals += len(res)
        return res

    def _pick(self, sids):
        if self.choose is not None:
            return self.choose(sids)
        if self.oneway:
            return min(sids, key=self.lab.__getitem__)
        return min(sids, key=self.canon.__getitem__)

    def _insert_oneway(self, eid, ver, t, h):
        setid, lab = self.setid, self.lab
        a, b = setid[t], setid[h]
        if a == b:
            return MergeReport()
        entry = (eid, ver)
        la = lab[a]
        if la < lab[b]:
            self.out[a].append(entry)
            return MergeReport()
        self.searches += 1
        seen = {b}
        order = [b]
        stack = [b]
        preds: dict = {}
        cycle = False
        while stack:
            c = stack.pop()
            for _, hs in self._scan(c):
                if hs == a:
                    cycle = True
                    preds.setdefault(a, []).append(c)
                elif lab[hs] < la:
                    preds.setdefault(hs, []).append(c)
                    if hs not in seen:
                        seen.add(hs)
                        order.append(hs)
                        stack.append(hs)
        self.out[a].append(entry)
        report = MergeReport()
        anchor = a
        if cycle:
            xs = {a}
            st = [a]
            while st:
                c = st.pop()
                for p in preds.get(c, ()):
                    if p not in xs:
                        xs.add(p)
                        st.append(p)
            xl = sorted(xs, key=lab.__getitem__)
            canonical = self.canon[self._pick(xl)]
            report.merged = [self.canon[s] for s in xl]
            anchor = self._merge(xl, canonical, a)
            report.canonical = canonical
            rest = [s for s in order if s not in xs]
        else:
            rest = order
        rest.sort(key=lab.__getitem__)
        for s in rest:
            self._unlink(s)
        self._place_after(anchor, rest)
        return report

    def _insert_twoway(self, eid, ver, t, h):
        setid, lvl = self.setid, self.lvl
        u, w = setid[t], setid[h]
        if u == w:
            return MergeReport()
        entry = (eid, ver)
        ku, kw = lvl[u], lvl[w]
        if ku < kw:
            self.out[u].append(entry)
            return MergeReport()
        self.searches += 1
        ever, etail = self.ever, self.etail
        inl = self.inl
        # backward search over same-level in-lists
        back = {u}
        stack = [u]
        budget = self.delta
        exhausted = False
        while stack and not exhausted:
            c = stack.pop()
            kc = lvl[c]
            lst = inl[c]
            kept = []
            for i, ent in enumerate(lst):
                e, v = ent
                if ever.get(e) != v:
                    continue
                src = setid[etail[e]]
                if src == c or lvl[src] != kc:
                    continue
                if budget == 0:
                    exhausted = True
                    kept.extend(lst[i:])
                    break
                kept.append(ent)
                budget -= 1
                self.traversals += 1
                if src not in back:
                    back.add(src)
                    stack.append(src)
            inl[c] = kept
        cycle = w in back
        if not cycle:
            if not exhausted and kw == ku:
                self.out[u].append(entry)
                inl[w].append(entry)
                return MergeReport()
            if exhausted:
                newk = ku + 1
                back = {u}
            else:
                newk = ku
            lvl[w] = newk
            inl[w] = []
            stack = [w]
            while stack:
                c = stack.pop()
                kc = lvl[c]
                for ent, hs in self._scan(c):
                    if hs in back:
                        cycle = True
                    kh = lvl[hs]
                    if kh < kc:
                        lvl[hs] = kc
                        inl[hs] = [ent]
                        stack.append(hs)
                    elif kh == kc:
                        inl[hs].append(ent)
        if not cycle:
            self.out[u].append(entry)
            if lvl[u] == lvl[w]:
                inl[w].append(entry)
            return MergeReport()
        # every set on a w -> u path now sits on u's level
        lu = lvl[u]
        seen = {w}
        stack = [w]
        preds: dict = {}
        while stack:
            c = stack.pop()
            for _, hs in self._scan(c):
                if lvl[hs] != lu:
                    continue
                preds.setdefault(hs, []).append(c)
                if hs not in seen:
                    seen.add(hs)
                    stack.append(hs)
        xs = {u}
        stack = [u]
        while stack:
            c = stack.pop()
            for p in preds.get(c, ()):
                if p not in xs:
                    xs.add(p)
                    stack.append(p)
        xl = sorted(xs, key=self.canon.__getitem__)
        canonical = self.canon[self._pick(xl)]
        report = MergeReport(canonical=canonical, merged=[self.canon[s] for s in xl])
        self._merge(xl, canonical, u)
        return report

    # -- checks ------------------------------------------------------------
    def live_edges(self):
        for e, ver in self.ever.items():
            yield e, self.etail[e], self.ehead[e]

    def check_invariants(self):
        """Assert order/level validity for every registered edge."""
        setid = self.setid
        for e, t, h in self.live_edges():
            a, b = setid[t], setid[h]
            if a == b:
                continue
            assert self.live[a] and self.live[b], (e, t, h)
            if self.oneway:
                assert self.grp[a] == self.grp[b], ("group", e, t, h)
                assert self.lab[a] < self.lab[b], ("order", e, t, h)
            else:
                assert self.lvl[a] <= self.lvl[b], ("level", e, t, h)
                if self.lvl[a] == self.lvl[b]:
                    ver = self.ever[e]
                    assert (e, ver) in self.inl[b], ("in-list", e, t, h)
            assert (e, self.ever[e]) in self.out[a], ("out-list", e, t, h)
        if self.oneway:
            for g in self.head:
                sid = self.head[g]
                prev = None
                while sid:
                    assert self.live[sid] and self.grp[sid] == g
                    if prev is not None:
                        assert prev < self.lab[sid]
                    prev = self.lab[sid]
                    sid = self.nxt[sid]
