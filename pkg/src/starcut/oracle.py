"""Exact minimum k-super cut search on small star graphs.

Two strategies provide ground truth for the cut-size formula (k+1)!(n-k-1):

* subset enumeration walks removal sets in ascending size below the
  constructive bound.  Sets of size s are decided through their size s-1
  prefix: one articulation-point (or bridge) scan of the partially removed
  graph classifies every extension at once.  Sizes below the classical
  connectivity are pruned wholesale, since such removals cannot disconnect.
* component growth enumerates connected induced subgraphs exactly once
  (anchor rule) and scores their neighborhoods or edge boundaries.

A result is labeled exact only together with a machine-checkable statement
of what was exhausted; anything truncated by budget is an upper bound.
"""

from __future__ import annotations

import itertools
import time
from collections import deque
from dataclasses import dataclass, field
from math import comb, inf

from .core import (
    InputError,
    InvariantViolationError,
    StarGraph,
    _canon_edge,
)
from .cuts import (
    cut_size_formula,
    is_k_edge_cut,
    is_k_vertex_cut,
    substar_isolating_cut,
)

# Max-flow prefilters and in-table searches are only attempted while the
# graph is small enough for them to finish in seconds.
_FLOW_PREFILTER_MAX_N = 5
_TABLE_SEARCH_MAX_N = 5
_PARITY_SUPERSET_CAP = 2_000_000
DEFAULT_TABLE_MAX_NODES = 500_000

_STRATEGIES = ("auto", "subset-enumeration", "component-growth")


@dataclass
class SearchBudget:
    """Limits for an oracle run; strategy "auto" means subset enumeration."""

    max_nodes: int | None = None
    max_wall_time: float | None = None
    strategy: str = "auto"

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise InputError("max_nodes must be positive")
        if self.max_wall_time is not None and self.max_wall_time <= 0:
            raise InputError("max_wall_time must be positive")
        if self.strategy not in _STRATEGIES:
            raise InputError(f"strategy must be one of {_STRATEGIES}")


@dataclass
class SearchStats:
    """Bookkeeping that justifies the result, node counts included."""

    strategy: str
    workers: int
    nodes: int = 0
    candidates_checked: int = 0
    sizes_examined: list[int] = field(default_factory=list)
    pruned_sizes: list[int] = field(default_factory=list)
    completed: bool = False
    lower_bound: int | None = None
    seed: int | None = None
    notes: list[str] = field(default_factory=list)
    wall_time: float = field(default=0.0, compare=False)


@dataclass
class OracleResult:
    """Outcome of a minimum k-super cut search."""

    mode: str  # "vertex" or "edge"
    n: int
    k: int
    kind: str  # "exact", "upper-bound-only", "no-cut-exists"
    value: int | None
    witness: list | None
    formula: int | None
    stats: SearchStats


@dataclass
class FormulaRow:
    """One (n, k) row of the formula comparison table."""

    n: int
    k: int
    formula: int
    construction_ok: bool
    oracle_kind: str
    oracle_value: int | None
    agree: bool


# ---------------------------------------------------------------------------
# classical connectivity via unit-capacity max flow (Menger)
# ---------------------------------------------------------------------------


def _vertex_split_network(adj):
    """Split every vertex into in/out halves joined by a unit arc."""
    V = len(adj)
    heads = [[] for _ in range(2 * V)]
    to: list[int] = []
    cap0: list[int] = []

    def arc(u, v, c):
        heads[u].append(len(to))
        to.append(v)
        cap0.append(c)

    for v in range(V):
        arc(2 * v, 2 * v + 1, 1)
        arc(2 * v + 1, 2 * v, 0)
    for u in range(V):
        for w in adj[u]:
            if w > u:
                arc(2 * u + 1, 2 * w, 1)
                arc(2 * w, 2 * u + 1, 0)
                arc(2 * w + 1, 2 * u, 1)
                arc(2 * u, 2 * w + 1, 0)
    return heads, to, cap0


def _edge_network(adj):
    """Each undirected edge becomes a mutually reverse pair of unit arcs."""
    V = len(adj)
    heads = [[] for _ in range(V)]
    to: list[int] = []
    cap0: list[int] = []
    for u in range(V):
        for w in adj[u]:
            if w > u:
                heads[u].append(len(to))
                to.append(w)
                cap0.append(1)
                heads[w].append(len(to))
                to.append(u)
                cap0.append(1)
    return heads, to, cap0


def _max_flow_unit(heads, to, cap, source, sink, limit):
    """Edmonds-Karp with unit augmentations, stopping at the given limit."""
    V = len(heads)
    flow = 0
    while flow < limit:
        parent = [-1] * V
        parent[source] = -2
        queue = deque([source])
        reached = False
        while queue and not reached:
            u = queue.popleft()
            for a in heads[u]:
                if cap[a]:
                    w = to[a]
                    if parent[w] == -1:
                        parent[w] = a
                        if w == sink:
                            reached = True
                            break
                        queue.append(w)
        if not reached:
            break
        v = sink
        while v != source:
            a = parent[v]
            cap[a] -= 1
            cap[a ^ 1] += 1
            v = to[a ^ 1]
        flow += 1
    return flow


# Star graphs of equal dimension are identical, so results cache by n.
_CLASSICAL_CACHE: dict[int, tuple[int, int]] = {}


def classical_connectivity(g: StarGraph) -> tuple[int, int]:
    """Exact (vertex, edge) connectivity by counting disjoint paths.

    One endpoint is fixed (the graph is vertex transitive) and the other
    ranges over all non-neighbors; one adjacent pair stands in for all of
    them in the edge computation, which edge transitivity permits.  With no
    non-neighbors at all the graph is complete and the vertex connectivity
    is |V| - 1 by convention.
    """
    if g.n < 2:
        raise InputError("connectivity needs n >= 2")
    cached = _CLASSICAL_CACHE.get(g.n)
    if cached is not None:
        return cached
    adj = g.adjacency_lists()
    V = g.num_vertices
    s = 0
    nbrs = set(adj[s])
    non_nbrs = [t for t in range(1, V) if t not in nbrs]

    if not non_nbrs:
        kappa = V - 1
    else:
        heads, to, cap0 = _vertex_split_network(adj)
        kappa = g.degree
        for t in non_nbrs:
            cap = cap0.copy()
            f = _max_flow_unit(heads, to, cap, 2 * s + 1, 2 * t, kappa)
            if f < kappa:
                kappa = f

    heads, to, cap0 = _edge_network(adj)
    lam = g.degree
    for t in non_nbrs + [min(nbrs)]:
        cap = cap0.copy()
        f = _max_flow_unit(heads, to, cap, s, t, lam)
        if f < lam:
            lam = f
    _CLASSICAL_CACHE[g.n] = (kappa, lam)
    return kappa, lam


# ---------------------------------------------------------------------------
# subset enumeration
# ---------------------------------------------------------------------------


def _combo_unrank_lex(idx: int, n: int, r: int) -> list[int]:
    """idx-th r-combination of range(n) in lexicographic order."""
    out = []
    x = 0
    for pos in range(r):
        while True:
            c = comb(n - 1 - x, r - pos - 1)
            if idx < c:
                out.append(x)
                x += 1
                break
            idx -= c
            x += 1
    return out


def _combo_next(c: list[int], n: int) -> bool:
    """Advance a sorted combination of range(n) in place; False when done."""
    r = len(c)
    for i in range(r - 1, -1, -1):
        if c[i] != i + n - r:
            c[i] += 1
            for j in range(i + 1, r):
                c[j] = c[j - 1] + 1
            return True
    return False


@dataclass
class _LevelPlan:
    size: int
    groups: list[tuple[int, int, int]]  # (last element L, base count, decided per base)
    bases_total: int
    decided_total: int
    truncated: bool


def _plan_level(ground: int, s: int, node_budget: int | None) -> _LevelPlan:
    """Lay out the size-s level: bases grouped by their largest element.

    Every size-s subset is decided exactly once, via the base formed by
    dropping its largest member.  A node budget truncates the plan at a
    base boundary, deterministically and independently of worker count.
    """
    groups: list[tuple[int, int, int]] = []
    decided = 0
    bases = 0
    truncated = False
    if node_budget is not None and node_budget <= 0:
        return _LevelPlan(s, [], 0, 0, True)
    if s == 1:
        groups.append((-1, 1, ground))
        return _LevelPlan(s, groups, 1, ground, False)
    for L in range(s - 2, ground - 1):
        cnt = comb(L, s - 2)
        if cnt == 0:
            continue
        per = ground - 1 - L
        if node_budget is None or decided + cnt * per <= node_budget:
            groups.append((L, cnt, per))
            decided += cnt * per
            bases += cnt
        else:
            remaining = node_budget - decided
            q = remaining // per
            if remaining % per:
                q += 1
            q = min(q, cnt)
            if q > 0:
                groups.append((L, q, per))
                decided += q * per
                bases += q
            truncated = True
            break
    return _LevelPlan(s, groups, bases, decided, truncated)


def _make_tasks(plan: _LevelPlan, workers: int) -> list[tuple[int, int, int, int]]:
    """Slice the base sequence into (s, L, inner_start, count) spans."""
    if plan.bases_total == 0:
        return []
    chunk = max(512, plan.bases_total // max(1, workers * 6))
    chunk = min(chunk, 65536)
    tasks = []
    for L, cnt, _per in plan.groups:
        off = 0
        while off < cnt:
            take = min(chunk, cnt - off)
            tasks.append((plan.size, L, off, take))
            off += take
    return tasks


class _WorkerState:
    """Per-process scratch space; rebuilt once per pool via the initializer."""

    def __init__(self, payload):
        self.mode = payload["mode"]
        self.k = payload["k"]
        self.deadline = payload["deadline"]
        self.track_disconnectors = payload["track_disconnectors"]
        if self.mode == "vertex":
            self.adj = payload["adj"]
            self.N = len(self.adj)
            self.ground = self.N
        else:
            self.adj_e = payload["adj_e"]
            self.N = len(self.adj_e)
            self.ground = payload["num_edges"]
            self.estamp = [0] * self.ground
        self.rstamp = [0] * self.ground
        self.vstamp = [0] * self.N
        self.astamp = [0] * max(self.N, self.ground)
        self.disc = [0] * self.N
        self.low = [0] * self.N
        self.gen = 0


_WS: _WorkerState | None = None


def _init_worker(payload):
    global _WS
    _WS = _WorkerState(payload)


def _artic_scan(ws: _WorkerState, base):
    """Components and articulation points of the graph minus `base` vertices."""
    ws.gen += 1
    gen = ws.gen
    rst = ws.rstamp
    for b in base:
        rst[b] = gen
    adj = ws.adj
    vst, disc, low, ast = ws.vstamp, ws.disc, ws.low, ws.astamp
    timer = 0
    ncomp = 0
    artics: list[int] = []
    for root in range(ws.N):
        if rst[root] == gen or vst[root] == gen:
            continue
        ncomp += 1
        root_children = 0
        sv = [root]
        sp = [-1]
        si = [0]
        vst[root] = gen
        disc[root] = low[root] = timer
        timer += 1
        while sv:
            v = sv[-1]
            row = adj[v]
            i = si[-1]
            if i < len(row):
                si[-1] = i + 1
                w = row[i]
                if rst[w] == gen or w == sp[-1]:
                    continue
                if vst[w] == gen:
                    dw = disc[w]
                    if dw < low[v]:
                        low[v] = dw
                else:
                    vst[w] = gen
                    disc[w] = low[w] = timer
                    timer += 1
                    sv.append(w)
                    sp.append(v)
                    si.append(0)
            else:
                sv.pop()
                si.pop()
                p = sp.pop()
                if p != -1:
                    lv = low[v]
                    if lv < low[p]:
                        low[p] = lv
                    if p == root:
                        root_children += 1
                    elif lv >= disc[p] and ast[p] != gen:
                        ast[p] = gen
                        artics.append(p)
        if root_children >= 2 and ast[root] != gen:
            ast[root] = gen
            artics.append(root)
    return ncomp, artics


def _bridge_scan(ws: _WorkerState, base):
    """Components and bridges (edge ids) of the graph minus `base` edges."""
    ws.gen += 1
    gen = ws.gen
    est = ws.estamp
    for b in base:
        est[b] = gen
    adj = ws.adj_e
    vst, disc, low, ast = ws.vstamp, ws.disc, ws.low, ws.astamp
    timer = 0
    ncomp = 0
    bridges: list[int] = []
    for root in range(ws.N):
        if vst[root] == gen:
            continue
        ncomp += 1
        sv = [root]
        se = [-1]
        si = [0]
        vst[root] = gen
        disc[root] = low[root] = timer
        timer += 1
        while sv:
            v = sv[-1]
            row = adj[v]
            i = si[-1]
            if i < len(row):
                si[-1] = i + 1
                w, eid = row[i]
                if est[eid] == gen or eid == se[-1]:
                    continue
                if vst[w] == gen:
                    dw = disc[w]
                    if dw < low[v]:
                        low[v] = dw
                else:
                    vst[w] = gen
                    disc[w] = low[w] = timer
                    timer += 1
                    sv.append(w)
                    se.append(eid)
                    si.append(0)
            else:
                sv.pop()
                si.pop()
                peid = se.pop()
                if peid != -1:
                    p = sv[-1]
                    lv = low[v]
                    if lv < low[p]:
                        low[p] = lv
                    if lv > disc[p]:
                        bridges.append(peid)
    return ncomp, bridges


def _check_vertex_removal(ws: _WorkerState, removal, k):
    """(disconnected, valid) for a vertex removal, same rules as is_k_vertex_cut."""
    ws.gen += 1
    gen = ws.gen
    rst = ws.rstamp
    for b in removal:
        rst[b] = gen
    adj = ws.adj
    vst = ws.vstamp
    survivors = ws.N - len(removal)
    if survivors == 0:
        return False, False
    ncomp = 0
    mind = ws.N
    stack: list[int] = []
    for root in range(ws.N):
        if rst[root] == gen or vst[root] == gen:
            continue
        ncomp += 1
        vst[root] = gen
        stack.append(root)
        while stack:
            u = stack.pop()
            deg = 0
            for w in adj[u]:
                if rst[w] == gen:
                    continue
                deg += 1
                if vst[w] != gen:
                    vst[w] = gen
                    stack.append(w)
            if deg < mind:
                mind = deg
    disconnected = ncomp >= 2 or survivors < 2
    return disconnected, disconnected and mind >= k


def _check_edge_removal(ws: _WorkerState, removal, k):
    """(disconnected, valid) for an edge removal, same rules as is_k_edge_cut."""
    ws.gen += 1
    gen = ws.gen
    est = ws.estamp
    for b in removal:
        est[b] = gen
    adj = ws.adj_e
    vst = ws.vstamp
    ncomp = 0
    mind = ws.N
    stack: list[int] = []
    for root in range(ws.N):
        if vst[root] == gen:
            continue
        ncomp += 1
        vst[root] = gen
        stack.append(root)
        while stack:
            u = stack.pop()
            deg = 0
            for w, eid in adj[u]:
                if est[eid] == gen:
                    continue
                deg += 1
                if vst[w] != gen:
                    vst[w] = gen
                    stack.append(w)
            if deg < mind:
                mind = deg
    disconnected = ncomp >= 2
    return disconnected, disconnected and mind >= k


def _run_task(task):
    """Decide every subset covered by a span of bases; see _plan_level."""
    ws = _WS
    s, L, start, count = task
    k = ws.k
    vertex = ws.mode == "vertex"
    scan = _artic_scan if vertex else _bridge_scan
    check = _check_vertex_removal if vertex else _check_edge_removal
    ground = ws.ground
    deadline = ws.deadline
    best = None
    disc_sets: list[tuple] = []
    nodes = 0
    checked = 0
    bases_done = 0
    expired = False

    if L == -1:
        rest: list[int] = []
        iters = 1
    else:
        rest = _combo_unrank_lex(start, L, s - 2)
        iters = count

    for it in range(iters):
        if deadline is not None and (it & 255) == 0 and time.monotonic() > deadline:
            expired = True
            break
        base = rest + [L] if L != -1 else []
        ncomp, critical = scan(ws, base)
        floor = L
        if ncomp >= 2 or (vertex and ws.N - s < 2):
            # already split, or the extension leaves fewer than two
            # survivors, which counts as disconnected by convention
            cands = range(floor + 1, ground)
        else:
            cands = sorted(c for c in critical if c > floor)
        for x in cands:
            removal = base + [x]
            disconnected, valid = check(ws, removal, k)
            checked += 1
            if disconnected and ws.track_disconnectors:
                disc_sets.append(tuple(removal))
            if valid:
                t = tuple(removal)
                if best is None or t < best:
                    best = t
        nodes += ground - 1 - floor
        bases_done += 1
        if it + 1 < iters and not _combo_next(rest, L):
            break
    return {
        "nodes": nodes,
        "checked": checked,
        "best": best,
        "disc": disc_sets,
        "bases": bases_done,
        "expired": expired,
    }


def _parity_superset_candidates(minimals, s, ground):
    """Size-s supersets of the tracked minimal disconnecting sets, or None.

    In a graph whose degrees are all even, every removal boundary (and so
    every minimal disconnecting edge set) has even size; at odd s there are
    no new minimal sets and the supersets below are the only candidates.
    Returns None when the candidate space is too large to be worthwhile.
    """
    estimate = 0
    for m in minimals:
        need = s - len(m)
        if need < 0:
            continue
        estimate += comb(ground - len(m), need)
        if estimate > _PARITY_SUPERSET_CAP:
            return None
    cands: set[tuple] = set()
    for m in minimals:
        need = s - len(m)
        if need < 0:
            continue
        if need == 0:
            cands.add(tuple(m))
            continue
        inside = set(m)
        others = [e for e in range(ground) if e not in inside]
        for extra in itertools.combinations(others, need):
            cands.add(tuple(sorted(m + extra)))
    return sorted(cands)


def _fold_results(results):
    nodes = 0
    checked = 0
    best = None
    disc: list[tuple] = []
    expired = False
    for r in results:
        nodes += r["nodes"]
        checked += r["checked"]
        if r["best"] is not None and (best is None or r["best"] < best):
            best = r["best"]
        disc.extend(r["disc"])
        expired = expired or r["expired"]
    return nodes, checked, best, disc, expired


def _update_minimals(minimals, disc_sets):
    """Keep only disconnecting sets that contain no previously known one."""
    known = [set(m) for m in minimals]
    for d in sorted(set(disc_sets)):
        ds = set(d)
        if not any(m <= ds for m in known):
            minimals.append(d)
            known.append(ds)


def _subset_search(g: StarGraph, k: int, mode: str, budget: SearchBudget,
                   workers: int, seed) -> OracleResult:
    t0 = time.monotonic()
    deadline = t0 + budget.max_wall_time if budget.max_wall_time else None
    n = g.n
    formula = cut_size_formula(n, k) if k <= n - 2 else None
    stats = SearchStats(strategy="subset-enumeration", workers=workers, seed=seed)

    construction_witness = None
    if formula is not None:
        cut = substar_isolating_cut(n, k, graph=g)
        if mode == "vertex":
            verdict = is_k_vertex_cut(g, cut.t, k)
            construction_witness = list(cut.t)
        else:
            verdict = is_k_edge_cut(g, cut.f, k)
            construction_witness = [tuple(e) for e in cut.f]
        if not verdict.valid:
            raise InvariantViolationError(
                f"constructed cut failed validation: {verdict.reason}"
            )

    adj = g.adjacency_lists()
    if mode == "vertex":
        ground = g.num_vertices
        edges = None
        payload = {"mode": "vertex", "adj": adj, "k": k, "deadline": deadline,
                   "track_disconnectors": False}
        max_size = formula - 1 if formula is not None else g.num_vertices - 1
    else:
        edges = [(u, w) for u in range(g.num_vertices) for w in adj[u] if w > u]
        edges.sort()
        eid = {e: i for i, e in enumerate(edges)}
        adj_e = [tuple() for _ in range(g.num_vertices)]
        for u in range(g.num_vertices):
            adj_e[u] = tuple((w, eid[_canon_edge(u, w)]) for w in adj[u])
        ground = len(edges)
        max_size = formula - 1 if formula is not None else ground
        parity = (n - 1) % 2 == 0
        payload = {"mode": "edge", "adj_e": adj_e, "num_edges": ground, "k": k,
                   "deadline": deadline, "track_disconnectors": parity}

    parity = mode == "edge" and (n - 1) % 2 == 0
    if parity:
        stats.notes.append(
            "odd sizes decided by boundary parity: every degree is even, so "
            "minimal disconnecting edge sets have even size"
        )

    conn_lb = 1
    if 2 <= n <= _FLOW_PREFILTER_MAX_N:
        kappa, lam = classical_connectivity(g)
        conn_lb = kappa if mode == "vertex" else lam
        stats.lower_bound = conn_lb
        stats.notes.append(
            f"sizes below {conn_lb} pruned: smaller removals cannot disconnect "
            "(classical connectivity computed by max flow)"
        )

    minimals: list[tuple] = []
    best = None
    best_size = None
    truncated = False
    nodes = 0
    checked = 0
    pool = None
    try:
        for s in range(1, max_size + 1):
            if s < conn_lb:
                stats.pruned_sizes.append(s)
                continue
            remaining = budget.max_nodes - nodes if budget.max_nodes is not None else None
            if remaining is not None and remaining <= 0:
                truncated = True
                break
            if deadline is not None and time.monotonic() > deadline:
                truncated = True
                break

            level_done = False
            if parity and s % 2 == 1:
                cands = _parity_superset_candidates(minimals, s, ground)
                if cands is not None:
                    if remaining is not None and len(cands) > remaining:
                        cands = cands[:remaining]
                        truncated = True
                    _init_worker(payload)
                    ws = _WS
                    check = _check_edge_removal
                    for cand in cands:
                        disconnected, valid = check(ws, list(cand), k)
                        checked += 1
                        if valid and (best is None or cand < best):
                            best = cand
                            best_size = s
                    nodes += len(cands)
                    level_done = True

            if not level_done:
                plan = _plan_level(ground, s, remaining)
                if plan.truncated:
                    truncated = True
                tasks = _make_tasks(plan, workers)
                if workers > 1 and len(tasks) > 1:
                    if pool is None:
                        import multiprocessing

                        ctx = multiprocessing.get_context("fork")
                        pool = ctx.Pool(workers, initializer=_init_worker,
                                        initargs=(payload,))
                    results = pool.map(_run_task, tasks)
                else:
                    _init_worker(payload)
                    results = [_run_task(t) for t in tasks]
                lv_nodes, lv_checked, lv_best, lv_disc, expired = _fold_results(results)
                nodes += lv_nodes
                checked += lv_checked
                if expired:
                    truncated = True
                if lv_best is not None and best is None:
                    best = lv_best
                    best_size = s
                if parity and not truncated:
                    _update_minimals(minimals, lv_disc)

            stats.sizes_examined.append(s)
            if best is not None or truncated:
                break
    finally:
        if pool is not None:
            pool.close()
            pool.join()

    stats.nodes = nodes
    stats.candidates_checked = checked
    stats.wall_time = time.monotonic() - t0

    if best is not None:
        # every smaller size was exhausted, so the first hit is the minimum
        stats.completed = True
        value = best_size
        witness = [edges[e] for e in best] if mode == "edge" else list(best)
        if formula is not None and value < formula:
            stats.notes.append("found a cut below the constructive bound")
        return OracleResult(mode=mode, n=n, k=k, kind="exact", value=value,
                            witness=witness, formula=formula, stats=stats)
    if truncated:
        stats.completed = False
        stats.notes.append("budget exhausted before the search class was decided")
        return OracleResult(mode=mode, n=n, k=k, kind="upper-bound-only",
                            value=formula, witness=construction_witness,
                            formula=formula, stats=stats)
    if formula is not None:
        stats.completed = True
        stats.notes.append(
            f"all removal sets of size < {formula} decided invalid; the "
            "constructed cut attains the bound"
        )
        return OracleResult(mode=mode, n=n, k=k, kind="exact", value=formula,
                            witness=construction_witness, formula=formula,
                            stats=stats)
    stats.completed = True
    stats.notes.append("every proper removal set was decided; no valid cut exists")
    return OracleResult(mode=mode, n=n, k=k, kind="no-cut-exists", value=None,
                        witness=None, formula=None, stats=stats)


# ---------------------------------------------------------------------------
# component growth
# ---------------------------------------------------------------------------


def _growth_search(g: StarGraph, k: int, mode: str, budget: SearchBudget,
                   seed) -> OracleResult:
    """Enumerate connected induced subgraphs once each and score their cuts.

    The smallest side of any optimal cut is such a subgraph of size at most
    |V|/2 with induced minimum degree >= k, so exhausting that class yields
    a sound lower bound; candidates that validate give the upper bound.
    For edge cuts both bounds meet automatically once the class is spent.
    """
    t0 = time.monotonic()
    deadline = t0 + budget.max_wall_time if budget.max_wall_time else None
    n = g.n
    N = g.num_vertices
    adj = g.adjacency_lists()
    formula = cut_size_formula(n, k) if k <= n - 2 else None
    cap = N // 2
    stats = SearchStats(strategy="component-growth", workers=1, seed=seed)
    stats.notes.append(f"connected induced subgraphs up to size {cap}")

    construction_witness = None
    if formula is not None:
        cut = substar_isolating_cut(n, k, graph=g)
        construction_witness = (list(cut.t) if mode == "vertex"
                                else [tuple(e) for e in cut.f])

    in_sub = bytearray(N)
    nbr_cnt = [0] * N
    sub: list[int] = []
    state = {
        "nodes": 0, "truncated": False, "lb": inf, "ub": inf, "witness": None,
        "edges_in": 0, "boundary": 0, "below_k": 0,
    }
    max_nodes = budget.max_nodes

    def add(v):
        in_sub[v] = 1
        sub.append(v)
        if nbr_cnt[v] < k:
            state["below_k"] += 1
        if nbr_cnt[v] > 0:
            state["boundary"] -= 1
        for w in adj[v]:
            if in_sub[w]:
                state["edges_in"] += 1
                if nbr_cnt[w] == k - 1:
                    state["below_k"] -= 1
            elif nbr_cnt[w] == 0:
                state["boundary"] += 1
            nbr_cnt[w] += 1

    def remove(v):
        sub.pop()
        in_sub[v] = 0
        for w in adj[v]:
            nbr_cnt[w] -= 1
            if in_sub[w]:
                state["edges_in"] -= 1
                if nbr_cnt[w] == k - 1:
                    state["below_k"] += 1
            elif nbr_cnt[w] == 0:
                state["boundary"] -= 1
        if nbr_cnt[v] < k:
            state["below_k"] -= 1
        if nbr_cnt[v] > 0:
            state["boundary"] += 1

    def evaluate():
        if state["below_k"] or len(sub) <= k:
            return
        if mode == "vertex":
            b = state["boundary"]
            if b == 0:
                return
            if b < state["lb"]:
                state["lb"] = b
            if b < state["ub"]:
                hood = sorted(w for w in range(N) if not in_sub[w] and nbr_cnt[w])
                if is_k_vertex_cut(g, hood, k).valid:
                    state["ub"] = b
                    state["witness"] = hood
        else:
            b = len(sub) * g.degree - 2 * state["edges_in"]
            if b < state["lb"]:
                state["lb"] = b
            if b < state["ub"]:
                boundary_edges = sorted(
                    _canon_edge(u, w)
                    for u in sub for w in adj[u] if not in_sub[w]
                )
                if is_k_edge_cut(g, boundary_edges, k).valid:
                    state["ub"] = b
                    state["witness"] = boundary_edges

    def extend(ext, anchor):
        state["nodes"] += 1
        if max_nodes is not None and state["nodes"] > max_nodes:
            state["truncated"] = True
            return
        if deadline is not None and state["nodes"] % 4096 == 0 \
                and time.monotonic() > deadline:
            state["truncated"] = True
            return
        evaluate()
        if len(sub) == cap:
            return
        # one added vertex shrinks a vertex boundary by at most 1 and an
        # edge boundary by at most the degree, so descendants of this state
        # can never beat the incumbent once the bound below exceeds it;
        # skipped descendants therefore cannot hold the class minimum either
        if state["ub"] is not inf:
            room = cap - len(sub)
            if mode == "vertex":
                reachable = state["boundary"] - room
            else:
                reachable = (len(sub) * g.degree - 2 * state["edges_in"]
                             - room * g.degree)
            if reachable > state["ub"]:
                return
        for idx in range(len(ext)):
            if state["truncated"]:
                return
            w = ext[idx]
            fresh = [u for u in adj[w]
                     if u > anchor and not in_sub[u] and nbr_cnt[u] == 0]
            add(w)
            extend(ext[idx + 1:] + fresh, anchor)
            remove(w)

    for v in range(N):
        if state["truncated"]:
            break
        add(v)
        extend([u for u in adj[v] if u > v], v)
        remove(v)

    stats.nodes = state["nodes"]
    stats.wall_time = time.monotonic() - t0
    stats.lower_bound = None if state["lb"] is inf else state["lb"]
    lb, ub = state["lb"], state["ub"]

    if not state["truncated"]:
        stats.completed = True
        if mode == "edge":
            if ub is not inf:
                return OracleResult(mode=mode, n=n, k=k, kind="exact", value=ub,
                                    witness=state["witness"], formula=formula,
                                    stats=stats)
            stats.notes.append("no side with both induced minimum degrees >= k exists")
            return OracleResult(mode=mode, n=n, k=k, kind="no-cut-exists",
                                value=None, witness=None, formula=formula,
                                stats=stats)
        if lb is inf:
            stats.notes.append("no admissible side exists, so no cut exists")
            return OracleResult(mode=mode, n=n, k=k, kind="no-cut-exists",
                                value=None, witness=None, formula=formula,
                                stats=stats)
        if ub == lb:
            return OracleResult(mode=mode, n=n, k=k, kind="exact", value=ub,
                                witness=state["witness"], formula=formula,
                                stats=stats)
        stats.notes.append("bounds did not close: some minimal neighborhood "
                           "failed remainder degree validation")
    stats.completed = False
    if ub is not inf and (formula is None or ub <= formula):
        value, witness = ub, state["witness"]
    else:
        value, witness = formula, construction_witness
    return OracleResult(mode=mode, n=n, k=k, kind="upper-bound-only", value=value,
                        witness=witness, formula=formula, stats=stats)


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------


def _oracle(g: StarGraph, k: int, mode: str, budget: SearchBudget | None,
            workers: int, seed) -> OracleResult:
    if g.n < 2:
        raise InputError("cut searches need n >= 2")
    if k < 0:
        raise InputError("k must be >= 0")
    if workers < 1:
        raise InputError("workers must be >= 1")
    budget = budget or SearchBudget()
    if budget.strategy == "component-growth":
        return _growth_search(g, k, mode, budget, seed)
    return _subset_search(g, k, mode, budget, workers, seed)


def exact_kappa_super(g: StarGraph, k: int, budget: SearchBudget | None = None,
                      workers: int = 1, seed: int | None = None) -> OracleResult:
    """Minimum k-vertex-cut size of g, exact whenever the class is exhausted."""
    return _oracle(g, k, "vertex", budget, workers, seed)


def exact_lambda_super(g: StarGraph, k: int, budget: SearchBudget | None = None,
                       workers: int = 1, seed: int | None = None) -> OracleResult:
    """Minimum k-edge-cut size of g, exact whenever the class is exhausted."""
    return _oracle(g, k, "edge", budget, workers, seed)


def compare_formula(n_values, k_values=None, budget: SearchBudget | None = None,
                    workers: int = 1, seed: int | None = None) -> list[FormulaRow]:
    """One row per (n, k): formula, construction validity, oracle verdict.

    The vertex-cut search runs only for n <= 5; beyond that the validated
    construction is reported as an upper bound, which is all that is
    tractable at desk scale.
    """
    budget = budget or SearchBudget(max_nodes=DEFAULT_TABLE_MAX_NODES)
    rows: list[FormulaRow] = []
    for n in n_values:
        if n < 2:
            raise InputError("table rows need n >= 2")
        g = StarGraph(n)
        for k in range(0, n - 1):
            if k_values is not None and k not in k_values:
                continue
            formula = cut_size_formula(n, k)
            cut = substar_isolating_cut(n, k, graph=g)
            construction_ok = (
                is_k_vertex_cut(g, cut.t, k).valid
                and is_k_edge_cut(g, cut.f, k).valid
            )
            if n <= _TABLE_SEARCH_MAX_N:
                res = exact_kappa_super(g, k, budget=budget, workers=workers,
                                        seed=seed)
                kind, value = res.kind, res.value
            else:
                kind = "upper-bound-only"
                value = formula if construction_ok else None
            rows.append(FormulaRow(n=n, k=k, formula=formula,
                                   construction_ok=construction_ok,
                                   oracle_kind=kind, oracle_value=value,
                                   agree=value == formula))
    return rows
