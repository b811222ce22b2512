"""Exhaustive search for (a,b,g)-wgraphs of a given order.

The search fixes the Moore-like wtree around a root (a vertex for odd ``g``,
a light or heavy edge for even ``g``); in any wgraph of girth at least ``g``
those tree vertices are pairwise distinct, so they may be labelled
canonically up front.  The remaining edges are added vertex by vertex in
label order: the lowest vertex with residual degree picks its light partners,
then its heavy partners, among higher vertices in increasing order.

Pruning:

* girth: an all-pairs weighted distance matrix (capped at ``g``) is kept
  up to date and edge ``uv`` of weight ``w`` is only added when
  ``dist(u, v) + w >= g``;
* degree feasibility: every vertex must keep enough admissible partners
  for its residual light, heavy and total degree;
* twins: vertices with identical light and heavy rows are interchangeable,
  so within such a class a round may only pick a prefix (light first);
* optional isomorph rejection at the first ``canon_depth`` round
  boundaries.

The first two branching levels are expanded into tasks which are solved in
index order (optionally by a process pool); outcomes are merged by task
index so results do not depend on the number of workers.
"""

from __future__ import annotations

import enum
import json
import multiprocessing
import time
from dataclasses import dataclass, field

import numpy as np

from . import wgf
from .bounds import Base, levels, moore_bounds, wcycle_exists
from .canon import canonical_certificate
from .wgraph import HEAVY, INF, LIGHT, Params, WGraph, verify_witness, wgirth

SPLIT_DEPTH = 2


class Verdict(enum.Enum):
    PROVEN_NONE = "proven_none"
    BUDGET_EXCEEDED = "budget_exceeded"


PROVEN_NONE = Verdict.PROVEN_NONE
BUDGET_EXCEEDED = Verdict.BUDGET_EXCEEDED


class Status(str, enum.Enum):
    EXACT = "EXACT"
    LOWER_ONLY = "LOWER_ONLY"
    NONEXISTENT = "NONEXISTENT"
    BUDGET_EXCEEDED = "BUDGET_EXCEEDED"


@dataclass(frozen=True)
class SearchConfig:
    max_order: int = 64
    node_budget: int = 50_000_000
    worker_count: int = 1
    prune_degree: bool = True
    prune_girth: bool = True
    moore_tree: bool = True
    canon_depth: int = 0
    deterministic: bool = True


# ---------------------------------------------------------------------------
# Moore-like tree used as the fixed starting structure
# ---------------------------------------------------------------------------

def moore_tree(a: int, b: int, g: int) -> tuple[int, list[tuple[int, int, int]], Base]:
    """Vertices and edges of the canonically labelled Moore-like wtree.

    Returns ``(size, edges, base)``; vertices are labelled level by level.
    """
    if g % 2:
        base, depth = Base.ODD, (g - 1) // 2
    else:
        depth = (g - 2) // 2
        opts = []
        if a >= 1:
            opts.append((levels(a, b, Base.EVEN_LIGHT, depth).total, 1, Base.EVEN_LIGHT))
        if b >= 1:
            opts.append((levels(a, b, Base.EVEN_HEAVY, depth).total, 0, Base.EVEN_HEAVY))
        base = max(opts)[2]

    # node: (level, kind); kind 'L' spawns a-1 light + b heavy children,
    # 'H' spawns a light + b-1 heavy, 'R' (odd root) spawns a light + b heavy
    by_level: dict[int, list[int]] = {}
    nodes: list[tuple[int, str]] = []
    edges: list[tuple[int, int, int]] = []

    def new(level, kind, parent=None, w=0):
        idx = len(nodes)
        nodes.append((level, kind))
        by_level.setdefault(level, []).append(idx)
        if parent is not None:
            edges.append((parent, idx, w))
        return idx

    if base is Base.ODD:
        new(0, "R")
    elif base is Base.EVEN_LIGHT:
        x = new(0, "L")
        new(0, "L", x, LIGHT)
    else:
        x = new(0, "H")
        new(1, "H", x, HEAVY)

    for level in range(depth + 1):
        for v in list(by_level.get(level, [])):
            kind = nodes[v][1]
            nl = a if kind in "RH" else a - 1
            nh = b if kind in "RL" else b - 1
            if level + 1 <= depth:
                for _ in range(nl):
                    new(level + 1, "L", v, LIGHT)
            if level + 2 <= depth:
                for _ in range(nh):
                    new(level + 2, "H", v, HEAVY)

    order = [v for lv in sorted(by_level) for v in by_level[lv]]
    label = {v: i for i, v in enumerate(order)}
    expected = levels(a, b, base, depth).total
    assert len(nodes) == expected, (len(nodes), expected)
    return len(nodes), sorted((min(label[u], label[v]), max(label[u], label[v]), w) for u, v, w in edges), base


# ---------------------------------------------------------------------------
# search core
# ---------------------------------------------------------------------------

class _Abort(Exception):
    pass


class _Engine:
    def __init__(self, p: Params, n: int, cfg: SearchConfig, exact_girth: bool = True):
        self.a, self.b, self.g = p.a, p.b, p.g
        self.n = n
        self.cfg = cfg
        self.exact = exact_girth
        self.L = [0] * n
        self.H = [0] * n
        self.resL = np.full(n, p.a, dtype=np.int16)
        self.resH = np.full(n, p.b, dtype=np.int16)
        self.D = np.full((n, n), p.g, dtype=np.int16)
        np.fill_diagonal(self.D, 0)
        self.ADJ = np.eye(n, dtype=bool)
        self.nodes = 0
        self.budget = cfg.node_budget
        self.prunes = {"girth": 0, "degree": 0, "twin": 0, "iso": 0, "girth_exact": 0}
        self.seen: set[bytes] = set()
        self.ok = True
        if cfg.moore_tree:
            size, tedges, _ = moore_tree(p.a, p.b, p.g)
            if size > n:
                self.ok = False
            else:
                for u, v, w in tedges:
                    self._add(u, v, w)
        else:
            # root normalisation only: vertex 0 gets neighbours 1..a light, a+1..a+b heavy
            if p.a + p.b >= n:
                self.ok = False
            else:
                for i in range(1, p.a + 1):
                    self._add(0, i, LIGHT)
                for i in range(p.a + 1, p.a + p.b + 1):
                    self._add(0, i, HEAVY)

    # -- state updates --------------------------------------------------
    def _add(self, u, v, w):
        saved = (self.D, self.ADJ)
        if self.cfg.prune_girth:
            D = self.D
            du = D[:, u]
            dv = D[:, v]
            nd = np.minimum(du[:, None] + dv[None, :], dv[:, None] + du[None, :]) + w
            D2 = np.minimum(D, nd)
            np.minimum(D2, self.g, out=D2)
            self.D = D2
        A = self.ADJ.copy()
        A[u, v] = A[v, u] = True
        self.ADJ = A
        if w == LIGHT:
            self.L[u] |= 1 << v
            self.L[v] |= 1 << u
            self.resL[u] -= 1
            self.resL[v] -= 1
        else:
            self.H[u] |= 1 << v
            self.H[v] |= 1 << u
            self.resH[u] -= 1
            self.resH[v] -= 1
        return saved

    def _remove(self, u, v, w, saved):
        self.D, self.ADJ = saved
        if w == LIGHT:
            self.L[u] &= ~(1 << v)
            self.L[v] &= ~(1 << u)
            self.resL[u] += 1
            self.resL[v] += 1
        else:
            self.H[u] &= ~(1 << v)
            self.H[v] &= ~(1 << u)
            self.resH[u] += 1
            self.resH[v] += 1

    def _feasible(self) -> bool:
        rl, rh = self.resL, self.resH
        free = ~self.ADJ
        if self.cfg.prune_girth:
            cl = free & (self.D >= self.g - 1) & (rl > 0)[None, :]
            ch = free & (self.D >= self.g - 2) & (rh > 0)[None, :]
        else:
            cl = free & (rl > 0)[None, :]
            ch = free & (rh > 0)[None, :]
        if (cl.sum(1) < rl).any() or (ch.sum(1) < rh).any():
            return False
        return not ((cl | ch).sum(1) < rl + rh).any()

    def graph(self) -> WGraph:
        light = [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if self.L[u] >> v & 1]
        heavy = [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if self.H[u] >> v & 1]
        return WGraph.from_edges(self.n, light, heavy)

    # -- recursion ------------------------------------------------------
    def run(self, prefix=(), collect: list | None = None):
        """Depth-first search; returns a witness WGraph or None.

        With ``collect`` given, branching stops at depth SPLIT_DEPTH and the
        decision paths reaching it (or ending earlier) are appended.
        """
        self.prefix = tuple(prefix)
        self.collect = collect
        if not self.ok:
            return None
        if self.cfg.prune_degree and not self._feasible():
            self.prunes["degree"] += 1
            return None
        return self._round(-1, [])

    def _round(self, prev_v, path):
        """Start the round of the next vertex with residual degree."""
        v = prev_v + 1
        n = self.n
        while v < n and self.resL[v] == 0 and self.resH[v] == 0:
            v += 1
        if v == n:
            if self.collect is not None:
                self.collect.append(tuple(path))
                return None
            return self._leaf()
        if self.cfg.canon_depth and v <= self.cfg.canon_depth and self.collect is None:
            cert = canonical_certificate(self.graph())
            if cert in self.seen:
                self.prunes["iso"] += 1
                return None
            self.seen.add(cert)
        # twin classes among later vertices, by identical (light, heavy) rows
        pred = {}
        lastof = {}
        for u in range(v + 1, n):
            key = (self.L[u], self.H[u])
            if key in lastof:
                pred[u] = lastof[key]
            lastof[key] = u
        color = LIGHT if self.resL[v] > 0 else HEAVY
        return self._slot(v, color, v, 0, pred, path)

    def _leaf(self):
        G = self.graph()
        gg = wgirth(G)
        if (gg == self.g) if self.exact else (gg >= self.g):
            return G
        self.prunes["girth_exact"] += 1
        return None

    def _slot(self, v, color, last, chosen, pred, path):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _Abort
        res = self.resL if color == LIGHT else self.resH
        need = int(res[v])
        if need == 0:
            if color == LIGHT and self.resH[v] > 0:
                return self._slot(v, HEAVY, v, chosen, pred, path)
            return self._round(v, path)
        depth = len(path)
        if self.collect is not None and depth >= SPLIT_DEPTH:
            self.collect.append(tuple(path))
            return None
        g = self.g
        w = color
        Drow = self.D[v]
        Arow = self.ADJ[v]
        check_girth = self.cfg.prune_girth
        cands = []
        for u in range(last + 1, self.n):
            if res[u] <= 0 or Arow[u]:
                continue
            if check_girth and Drow[u] + w < g:
                self.prunes["girth"] += 1
                continue
            cands.append(u)
        if len(cands) < need:
            self.prunes["degree"] += 1
            return None
        forced = self.prefix[depth] if depth < len(self.prefix) else None
        for i, u in enumerate(cands):
            if len(cands) - i < need:
                break
            if forced is not None and u != forced:
                continue
            pu = pred.get(u)
            if pu is not None and not (chosen >> pu) & 1:
                # a twin class is used as a prefix
                self.prunes["twin"] += 1
                continue
            # recheck: earlier picks in this round may have shortened dist(v,u)
            if check_girth and self.D[v, u] + w < g:
                self.prunes["girth"] += 1
                continue
            saved = self._add(v, u, w)
            if self.cfg.prune_degree and not self._feasible():
                self.prunes["degree"] += 1
            else:
                found = self._slot(v, color, u, chosen | (1 << u), pred, path + [u])
                if found is not None:
                    return found
            self._remove(v, u, w, saved)
            if forced is not None:
                break
        return None


# ---------------------------------------------------------------------------
# task decomposition and merge
# ---------------------------------------------------------------------------

@dataclass
class OrderResult:
    n: int
    verdict: Verdict | None
    witness: WGraph | None
    nodes: int
    prunes: dict = field(default_factory=dict)


def _run_task(args):
    p, n, cfg, prefix, exact = args
    eng = _Engine(p, n, cfg, exact)
    try:
        G = eng.run(prefix)
        exceeded = False
    except _Abort:
        G, exceeded = None, True
    edges = (G.light_bits, G.heavy_bits) if G is not None else None
    return edges, min(eng.nodes, cfg.node_budget), exceeded, eng.prunes


def _prechecks(p: Params, n: int) -> bool:
    """True when the order is excluded without search."""
    if n < 1 or not wcycle_exists(p):
        return True
    if (p.a * n) % 2 or (p.b * n) % 2:
        return True
    return n < moore_bounds(p).combined


def search_order(p: Params, n: int, cfg: SearchConfig | None = None, exact_girth: bool = True) -> OrderResult:
    """Decide whether an (a,b,g)-wgraph of order ``n`` exists."""
    cfg = cfg or SearchConfig()
    if exact_girth and _prechecks(p, n):
        return OrderResult(n, PROVEN_NONE, None, 0)
    if not exact_girth and ((p.a * n) % 2 or (p.b * n) % 2):
        return OrderResult(n, PROVEN_NONE, None, 0)
    root = _Engine(p, n, cfg, exact_girth)
    tasks: list[tuple] = []
    try:
        root.run((), collect=tasks)
    except _Abort:
        return OrderResult(n, BUDGET_EXCEEDED, None, cfg.node_budget, dict(root.prunes))
    prunes = dict(root.prunes)
    total = root.nodes
    if total > cfg.node_budget:
        return OrderResult(n, BUDGET_EXCEEDED, None, cfg.node_budget, prunes)
    args = [(p, n, cfg, t, exact_girth) for t in tasks]

    def merge(results):
        nonlocal total
        for edges, nodes, exceeded, pr in results:
            total += nodes
            for k, c in pr.items():
                prunes[k] = prunes.get(k, 0) + c
            if exceeded or total > cfg.node_budget:
                return OrderResult(n, BUDGET_EXCEEDED, None, cfg.node_budget, prunes)
            if edges is not None:
                G = WGraph(n, *edges)
                return OrderResult(n, None, G, total, prunes)
        return OrderResult(n, PROVEN_NONE, None, total, prunes)

    if cfg.worker_count <= 1 or len(args) <= 1:
        def sequential():
            spent = total
            for p_, n_, cfg_, prefix, exact in args:
                sub = SearchConfig(**{**cfg_.__dict__, "node_budget": max(0, cfg.node_budget - spent)})
                res = _run_task((p_, n_, sub, prefix, exact))
                spent += res[1]
                yield res
                if res[0] is not None or res[2]:
                    return

        return merge(sequential())

    ctx = multiprocessing.get_context("fork")
    pool = ctx.Pool(cfg.worker_count)
    try:
        return merge(pool.imap(_run_task, args, chunksize=1))
    finally:
        pool.terminate()
        pool.join()


def exists_wgraph(p: Params, n: int, cfg: SearchConfig | None = None):
    """A verified (a,b,g)-wgraph on ``n`` vertices, ``PROVEN_NONE`` or ``BUDGET_EXCEEDED``."""
    res = search_order(p, n, cfg)
    if res.witness is not None:
        assert verify_witness(res.witness, p)
        return res.witness
    return res.verdict


def find_regular_graph(r: int, g: int, n_max: int, budget: int = 2_000_000) -> WGraph | None:
    """Smallest r-regular plain graph of girth at least ``g`` up to ``n_max`` vertices."""
    p = Params(r, 0, g)
    start = moore_bounds(p).combined
    cfg = SearchConfig(node_budget=budget)
    for n in range(start, n_max + 1):
        res = search_order(p, n, cfg, exact_girth=False)
        if res.witness is not None:
            return res.witness
        if res.verdict is BUDGET_EXCEEDED:
            return None
    return None


# ---------------------------------------------------------------------------
# n(a,b,g)
# ---------------------------------------------------------------------------

@dataclass
class SearchOutcome:
    params: Params
    status: Status
    value: float
    witness: WGraph | None
    exhausted_orders: list[tuple[int, int]]
    stats: dict

    def to_dict(self) -> dict:
        return {
            "params": {"a": self.params.a, "b": self.params.b, "g": self.params.g},
            "status": self.status.value,
            "value": "inf" if self.value == INF else int(self.value),
            "witness_wgf": wgf.dumps(self.witness) if self.witness is not None else None,
            "exhausted_orders": [[n, c] for n, c in self.exhausted_orders],
            "stats": self.stats,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def find_wcage(p: Params, cfg: SearchConfig | None = None) -> SearchOutcome:
    """Determine n(a,b,g) by exhaustive search from the combined lower bound up."""
    cfg = cfg or SearchConfig()
    t0 = time.perf_counter()
    stats = {"nodes": 0, "prunes": {}}

    def finish(status, value, witness, exhausted):
        if not cfg.deterministic:
            stats["wall_time"] = round(time.perf_counter() - t0, 6)
        return SearchOutcome(p, status, value, witness, exhausted, stats)

    if not wcycle_exists(p):
        return finish(Status.NONEXISTENT, INF, None, [])
    lower = moore_bounds(p).combined
    exhausted: list[tuple[int, int]] = []
    spent = 0
    for n in range(lower, cfg.max_order + 1):
        if (p.a * n) % 2 or (p.b * n) % 2:
            continue
        sub = SearchConfig(**{**cfg.__dict__, "node_budget": cfg.node_budget - spent})
        res = search_order(p, n, sub)
        spent += res.nodes
        stats["nodes"] = spent
        for k, c in res.prunes.items():
            stats["prunes"][k] = stats["prunes"].get(k, 0) + c
        if res.witness is not None:
            return finish(Status.EXACT, n, res.witness, exhausted)
        if res.verdict is BUDGET_EXCEEDED:
            return finish(Status.BUDGET_EXCEEDED, n, None, exhausted)
        exhausted.append((n, res.nodes))
    return finish(Status.LOWER_ONLY, cfg.max_order + 1, None, exhausted)


# ---------------------------------------------------------------------------
# independent oracle
# ---------------------------------------------------------------------------

NAIVE_MAX_ORDER = 7


def naive_enumerate(p: Params, n: int):
    """Brute-force oracle: try every {none, light, heavy} assignment row by row.

    Only degree counts prune the enumeration; the weighted girth of the
    partial graph is checked after each completed row.  Returns a witness
    or ``PROVEN_NONE``.
    """
    if n > NAIVE_MAX_ORDER:
        raise ValueError(f"naive enumeration is capped at n={NAIVE_MAX_ORDER}")
    a, b, g = p
    degL = [0] * n
    degH = [0] * n
    light: list[tuple[int, int]] = []
    heavy: list[tuple[int, int]] = []

    def row(i, j):
        if i == n:
            G = WGraph.from_edges(n, light, heavy)
            return G if verify_witness(G, p) else None
        if j == n:
            if degL[i] != a or degH[i] != b:
                return None
            if wgirth(WGraph.from_edges(n, light, heavy)) < g:
                return None
            return row(i + 1, i + 2)
        # remaining pairs in this row bound what vertex i can still gain
        left = n - j
        if degL[i] + degH[i] + left < a + b or degL[i] > a or degH[i] > b:
            return None
        found = row(i, j + 1)
        if found:
            return found
        if degL[i] < a and degL[j] < a:
            degL[i] += 1
            degL[j] += 1
            light.append((i, j))
            found = row(i, j + 1)
            light.pop()
            degL[i] -= 1
            degL[j] -= 1
            if found:
                return found
        if degH[i] < b and degH[j] < b:
            degH[i] += 1
            degH[j] += 1
            heavy.append((i, j))
            found = row(i, j + 1)
            heavy.pop()
            degH[i] -= 1
            degH[j] -= 1
            if found:
                return found
        return None

    res = row(0, 1) if n > 1 else row(0, 1)
    return res if res is not None else PROVEN_NONE
