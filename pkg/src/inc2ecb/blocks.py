"""Block maintenance: per strongly connected component state, the update
after an insertion inside a component, and the top-level index over a
general digraph."""

from __future__ import annotations

from dataclasses import dataclass, field

from .auxiliary import components_of, edge_rep, static_representatives
from .dominator import DominatorState, compute_dominator_state
from .graph import Digraph, strongly_connected_components
from .incscc import IncScc, delta_for


@dataclass
class Metrics:
    """Instrumentation counters.  Per-vertex lists are indexed by vertex and
    by side (0 = forward, 1 = reverse)."""

    n: int
    scanned: list = field(default_factory=list)
    ted: list = field(default_factory=list)
    insertions: int = 0
    noops: int = 0
    inits: int = 0
    reinits: int = 0
    max_reinits_per_component: int = 0
    moved: int = 0
    relink_merges: int = 0
    strong_bridges_seen: set = field(default_factory=set)

    def __post_init__(self):
        self.scanned = [[0] * (self.n + 1) for _ in range(2)]
        self.ted = [[0] * (self.n + 1) for _ in range(2)]

    def scanned_events(self) -> int:
        return sum(map(sum, self.scanned))

    def as_dict(self, index=None) -> dict:
        d = {
            "insertions": self.insertions,
            "noops": self.noops,
            "inits": self.inits,
            "reinits": self.reinits,
            "max_reinits_per_component": self.max_reinits_per_component,
            "scanned_events": self.scanned_events(),
            "max_scanned_per_vertex": max(max(s) for s in self.scanned),
            "moved_vertices": self.moved,
            "strong_bridges_seen": len(self.strong_bridges_seen),
        }
        if index is not None:
            d["top_unites"] = index.top.unites
            d["aux_unites"] = index.retired_aux_unites + sum(
                st.fwd_scc.unites + st.rev_scc.unites for st in index.states.values()
            )
        return d


class ScBlockState:
    """Everything kept for one strongly connected component ``C``."""

    def __init__(self, g, rg, vertices, s, engine, fwd=None, rev=None):
        n = g.n
        self.g, self.rg = g, rg
        self.s = s
        self.vertices = sorted(vertices)
        self.engine = engine
        inside = [False] * (n + 1)
        for v in self.vertices:
            inside[v] = True
        self.inside = inside
        self.reinits = 0
        self._build(fwd, rev)

    def _build(self, fwd=None, rev=None):
        g, rg, s = self.g, self.rg, self.s
        if fwd is None:
            fwd = compute_dominator_state(g, s, self.vertices, self.inside)
        if rev is None:
            rev = compute_dominator_state(rg, s, self.vertices, self.inside)
        self.fwd: DominatorState = fwd
        self.rev: DominatorState = rev
        k = len(self.vertices)
        delta = delta_for(k, max(g.m, k))
        self.fwd_scc = _build_scc(fwd, g, self.engine, delta)
        self.rev_scc = _build_scc(rev, rg, self.engine, delta)

    @property
    def sides(self):
        return ((self.fwd, self.fwd_scc, self.g), (self.rev, self.rev_scc, self.rg))

    def strong_bridges(self) -> list:
        """Strong bridges inside the component as graph edges."""
        res = set(self.fwd.bridges())
        res.update((v, p) for p, v in self.rev.bridges())
        return sorted(res)

    def labels(self) -> dict:
        fr, rr = self.fwd.root, self.rev.root
        fs, rs = self.fwd_scc.setid, self.rev_scc.setid
        return {v: (fr[v], fs[v], rr[v], rs[v]) for v in self.vertices}


def _build_scc(st: DominatorState, side, engine, delta) -> IncScc:
    reps = static_representatives(st, side)
    comps = components_of(st, side, reps)
    scc = IncScc(side.n, engine, delta)
    root = st.root
    for comp in comps:
        scc.add_set(comp, group=root[comp[0]])
    head = side.edge_head
    for e in sorted(reps):
        scc.record(e, reps[e], head[e])
    return scc


def initialize_component(g: Digraph, vertices, s: int, engine: str = "oneway", rg=None) -> ScBlockState:
    """Fresh state for the strongly connected ``G[vertices]`` with start ``s``.
    Raises ``ValueError`` when ``G[vertices]`` is not strongly connected."""
    vertices = list(vertices)
    if s not in vertices:
        raise ValueError(f"start vertex {s} not in the component")
    return ScBlockState(g, rg if rg is not None else g.reverse(), vertices, s, engine)


def first_bridge_below(st: DominatorState, z: int, y: int):
    """First bridge ``(p, q)`` on the tree path from ``z`` down to ``y``, or
    ``None`` when ``y`` lies in ``z``'s decomposition tree."""
    root, parent = st.root, st.parent
    rz = root[z]
    r = root[y]
    if r == rz:
        return None
    while True:
        p = parent[r]
        if root[p] == rz:
            return p, r
        r = root[p]


def sc_insert_edge(state: ScBlockState, x: int, y: int, eid: int, metrics: Metrics | None = None,
                   checks: bool = False) -> bool:
    """Update ``state`` for the graph edge ``eid = (x, y)`` already stored in
    the graph.  Returns ``True`` if the component was reinitialized."""
    fwd, rev = state.fwd, state.rev
    pq_f = first_bridge_below(fwd, fwd.nca(x, y), y) if y != state.s else None
    pq_r = first_bridge_below(rev, rev.nca(y, x), x) if x != state.s else None
    rep_f = fwd.apply_insertion(x, y)
    rep_r = rev.apply_insertion(y, x)
    if metrics is not None:
        for side, rep in ((0, rep_f), (1, rep_r)):
            cnt = metrics.scanned[side]
            for v in rep.scanned:
                cnt[v] += 1
    if rep_f.locally_canceled or rep_r.locally_canceled:
        state.reinits += 1
        state._build(fwd, rev)
        if metrics is not None:
            metrics.reinits += 1
            metrics.inits += 1
            if state.reinits > metrics.max_reinits_per_component:
                metrics.max_reinits_per_component = state.reinits
            metrics.strong_bridges_seen.update(state.strong_bridges())
        if checks:
            _check_state(state, metrics)
        return True
    update_ac(state, fwd, state.fwd_scc, state.g, rep_f, x, y, eid, pq_f, metrics, checks)
    update_ac(state, rev, state.rev_scc, state.rg, rep_r, y, x, eid, pq_r, metrics, checks)
    if checks:
        _check_state(state, metrics)
    return False


def update_ac(state, st: DominatorState, scc: IncScc, side, report, x, y, eid, pq,
              metrics=None, checks=False):
    """Refresh the auxiliary components of one side after ``st`` absorbed the
    insertion of side edge ``(x, y)`` (graph edge ``eid``)."""
    scanned = report.scanned
    inside = st.inside
    root = st.root
    out_adj, out_eid, in_eid = side.out_adj, side.out_eid, side.in_eid
    touched = []
    if scanned:
        rz = root[report.z]
        old_root = report.old_root
        moved = [v for v in scanned if old_root[v] != rz and root[v] == rz]
        if moved:
            if metrics is not None:
                metrics.moved += len(moved)
            _absorb_moved(st, scc, side, scanned, moved, rz, old_root, eid, pq, checks)
        seen = set()
        for v in scanned:
            for e in out_eid[v]:
                if e not in seen:
                    seen.add(e)
                    touched.append(e)
        for v in moved:
            for e in in_eid[v]:
                if e not in seen:
                    seen.add(e)
                    touched.append(e)
    head = side.edge_head
    for e in touched:
        if e == eid:
            continue
        scc.unlink(e)
        t2 = edge_rep(st, side, e)
        if t2 is not None:
            merged = scc.link(e, t2, head[e])
            if merged and metrics is not None:
                metrics.relink_merges += 1
    scc.unlink(eid)
    t2 = edge_rep(st, side, eid)
    if t2 is not None:
        scc.link(eid, t2, y)


def _absorb_moved(st, scc: IncScc, side, scanned, moved, rz, old_root, eid, pq, checks):
    """Steps that relocate moved components into the auxiliary graph of
    ``rz``: scanned graph, merges into ``p``'s component, admissions."""
    if pq is None:
        raise AssertionError("moved vertices without a bridge between z and y")
    p, _q = pq
    inside = st.inside
    setid = scc.setid
    fp_set = setid[p]
    hv = [v for v in scanned if old_root[v] != rz]
    in_h = set(hv)
    succ = {}
    star = set()
    out_adj, out_eid = side.out_adj, side.out_eid
    root = st.root
    for v in hv:
        lst = []
        for w, e in zip(out_adj[v], out_eid[v]):
            if e == eid or not inside[w]:
                continue
            if w in in_h:
                lst.append(w)
            elif old_root.get(w, root[w]) == rz and setid[w] == fp_set:
                star.add(v)
        succ[v] = lst
    comps = strongly_connected_components(hv, succ.__getitem__)
    comp_of = {}
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    reach = [False] * len(comps)
    for i in range(len(comps) - 1, -1, -1):
        for v in comps[i]:
            if v in star or any(reach[comp_of[w]] for w in succ[v] if comp_of[w] != i):
                reach[i] = True
                break
    moved_set = set(moved)
    if checks:
        for sid in {setid[v] for v in moved}:
            assert all(u in moved_set for u in scc.members[sid]), "partial component moved"
    canon = scc.canon
    after = canon[fp_set]
    for i, comp in enumerate(comps):
        sids = []
        for v in comp:
            if v in moved_set:
                sid = setid[v]
                if sid not in sids:
                    sids.append(sid)
        if not sids:
            continue
        cans = [canon[sid] for sid in sids]
        for c in cans:
            scc.evict(c)
        if reach[i]:
            fp = canon[setid[p]]
            for c in cans:
                scc.unite(fp, c)
        else:
            c0 = min(cans)
            for c in cans:
                if c != c0:
                    scc.unite(c0, c)
            scc.admit_after(c0, after)
            after = c0


def _check_state(state: ScBlockState, metrics: Metrics | None):
    n_c = len(state.vertices)
    assert state.reinits <= 2 * (n_c - 1), "too many reinitializations"
    for scc in (state.fwd_scc, state.rev_scc):
        scc.check_invariants()
    if metrics is not None:
        n = metrics.n
        assert len(metrics.strong_bridges_seen) <= 2 * (n - 1), "strong bridge budget exceeded"
        for side in (0, 1):
            sc, ted = metrics.scanned[side], metrics.ted[side]
            for v in state.vertices:
                assert sc[v] <= ted[v] <= 2 * n, ("scan budget", side, v, sc[v], ted[v])


class TwoEcIndex:
    """2-edge-connected blocks of a digraph under edge insertions."""

    def __init__(self, n: int, engine: str = "twoway", checks: bool = False):
        if engine not in ("oneway", "twoway"):
            raise ValueError(f"unknown engine {engine!r}")
        self.g = Digraph(n)
        self.rg = self.g.reverse()
        self.n = n
        self.engine = engine
        self.checks = checks
        self.top = IncScc(n, "oneway", choose=self._choose_principal)
        for v in range(1, n + 1):
            self.top.add_set([v])
        self.states: dict = {}           # top-level set id -> ScBlockState
        self.metrics = Metrics(n)
        self.retired_aux_unites = 0
        self._principal = 0
        self._merging: list = []
        self._principal_members: list = []

    def _choose_principal(self, sids):
        """Top-level merge hook: the largest merged set (tie: smaller
        canonical) is principal and keeps its canonical vertex."""
        members, canon = self.top.members, self.top.canon
        best = min(sids, key=lambda t: (-len(members[t]), canon[t]))
        self._merging = list(sids)
        self._principal = best
        self._principal_members = list(members[best])
        return best

    def insert_edge(self, x: int, y: int):
        """Insert ``(x, y)``.  Returns the new edge id, or ``None`` for a
        self-loop or duplicate."""
        eid = self.g.add_edge(x, y)
        m = self.metrics
        if eid is None:
            m.noops += 1
            return None
        m.insertions += 1
        top = self.top
        a = top.setid[x]
        if a == top.setid[y]:
            sc_insert_edge(self.states[a], x, y, eid, m, self.checks)
        elif top.link(eid, x, y):
            self._merge(top.setid[x])
        return eid

    def _merge(self, new_sid):
        top, m = self.top, self.metrics
        principal_state = None
        for sid in self._merging:
            st = self.states.pop(sid, None)
            if st is None:
                continue
            self.retired_aux_unites += st.fwd_scc.unites + st.rev_scc.unites
            if sid == self._principal:
                principal_state = st
        s = principal_state.s if principal_state is not None else self._principal_members[0]
        members = top.members[new_sid]
        state = ScBlockState(self.g, self.rg, members, s, self.engine)
        self.states[new_sid] = state
        m.inits += 1
        keep = [False] * (self.n + 1)
        for v in self._principal_members:
            keep[v] = True
        for side, dom in ((0, state.fwd), (1, state.rev)):
            ted = m.ted[side]
            depth = dom.depth
            for v in members:
                if not keep[v]:
                    ted[v] += depth[v]
        m.strong_bridges_seen.update(state.strong_bridges())
        if self.checks:
            _check_state(state, m)

    # -- reading ---------------------------------------------------------
    def state_of(self, v: int):
        return self.states.get(self.top.setid[v])

    def strong_bridges(self) -> list:
        res = []
        for st in self.states.values():
            res.extend(st.strong_bridges())
        return sorted(res)

    def dominator_states(self):
        for st in self.states.values():
            yield st.fwd
            yield st.rev


def blocks_snapshot(index: TwoEcIndex) -> list:
    """Partition of all vertices into blocks, ordered by minimum member with
    members ascending."""
    top_set = index.top.setid
    states = index.states
    buckets: dict = {}
    blocks = []
    for v in range(1, index.n + 1):
        t = top_set[v]
        st = states.get(t)
        if st is None:
            blocks.append([v])
            continue
        key = (t, st.fwd.root[v], st.fwd_scc.setid[v], st.rev.root[v], st.rev_scc.setid[v])
        blk = buckets.get(key)
        if blk is None:
            blk = buckets[key] = []
            blocks.append(blk)
        blk.append(v)
    return blocks


def static_blocks(g: Digraph) -> list:
    """Blocks computed from scratch by the static labeling algorithm (the
    baseline the incremental index is measured against)."""
    n = g.n
    rg = g.reverse()
    comps = strongly_connected_components(range(1, n + 1), g.out_adj.__getitem__, n)
    label = [None] * (n + 1)
    inside = [False] * (n + 1)
    for ci, comp in enumerate(comps):
        if len(comp) == 1:
            label[comp[0]] = (ci,)
            continue
        for v in comp:
            inside[v] = True
        s = min(comp)
        parts = []
        for side in (g, rg):
            st = compute_dominator_state(side, s, comp, inside)
            reps = static_representatives(st, side)
            cid = {}
            for j, aux in enumerate(components_of(st, side, reps)):
                for v in aux:
                    cid[v] = j
            parts.append((st.root, cid))
        (fr, fc), (rr, rc) = parts
        for v in comp:
            label[v] = (ci, fr[v], fc[v], rr[v], rc[v])
            inside[v] = False
    buckets: dict = {}
    blocks = []
    for v in range(1, n + 1):
        blk = buckets.get(label[v])
        if blk is None:
            blk = buckets[label[v]] = []
            blocks.append(blk)
        blk.append(v)
    return blocks
