"""Splitting a cage X into a factor F and its complement: G = (F, X - F).

Factors and Hamiltonian cycles are found by budgeted backtracking.  Both
searches take an optional ``accept`` predicate on the finished factor and
an optional ``split_girth`` target: the weighted girth of the partially
decided split only decreases as edges are decided, so branches whose
decided part already has a shorter wcycle are cut.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from ..bounds import n0
from ..wgraph import HEAVY, INF, LIGHT, WGraph, is_regular, wgirth

Edge = tuple[int, int]


class _Budget(Exception):
    pass


@dataclass
class FactorStats:
    nodes: int = 0
    exhausted: bool = False
    rejected: int = 0


def _e(u, v):
    return (u, v) if u < v else (v, u)


class _Decided:
    """Weighted graph of the edges decided so far (factor or complement)."""

    def __init__(self, n):
        self.adj: list[dict[int, int]] = [dict() for _ in range(n)]

    def add(self, u, v, w):
        self.adj[u][v] = w
        self.adj[v][u] = w

    def remove(self, u, v):
        del self.adj[u][v]
        del self.adj[v][u]

    def dist_below(self, s, t, limit) -> bool:
        """Whether dist(s, t) < limit."""
        if s == t:
            return limit > 0
        dist = {s: 0}
        heap = [(0, s)]
        while heap:
            d, x = heapq.heappop(heap)
            if d >= limit:
                return False
            if x == t:
                return True
            if d > dist[x]:
                continue
            for y, w in self.adj[x].items():
                nd = d + w
                if nd < limit and nd < dist.get(y, INF):
                    dist[y] = nd
                    heapq.heappush(heap, (nd, y))
        return False


def find_factor(
    X: WGraph,
    a: int,
    min_girth: int | None = None,
    *,
    hamiltonian: bool = False,
    accept=None,
    split_girth: int | None = None,
    factor_weight: int = LIGHT,
    budget: int = 1_000_000,
    stats: FactorStats | None = None,
) -> frozenset[Edge] | None:
    """An a-regular spanning subgraph of the plain graph ``X``.

    ``min_girth`` bounds the girth of the factor itself; ``hamiltonian``
    (a = 2 only) asks for a single spanning cycle.  Returns ``None`` when
    the search is exhausted or the node budget runs out (see ``stats``).
    """
    stats = stats if stats is not None else FactorStats()
    if hamiltonian:
        if a != 2:
            raise ValueError("a Hamiltonian factor has a = 2")
        cyc = hamiltonian_cycle(X, budget=budget, accept=(lambda c: accept(_cycle_edges(c))) if accept else None,
                                split_girth=split_girth, factor_weight=factor_weight, stats=stats)
        return _cycle_edges(cyc) if cyc is not None else None
    n = X.n
    if (a * n) % 2 or a < 0:
        stats.exhausted = True
        return None
    nbrs = [sorted(s) for s in X.adjacency()[0]]
    other_weight = HEAVY if factor_weight == LIGHT else LIGHT
    fdeg = [0] * n
    status: dict[Edge, int] = {}  # 1 in factor, 0 out
    F: list[Edge] = []
    fadj: list[set[int]] = [set() for _ in range(n)]
    decided = _Decided(n)

    def factor_dist_below(s, t, limit):
        # BFS in the factor
        seen = {s}
        frontier = [s]
        d = 0
        while frontier and d < limit:
            if t in seen:
                return True
            d += 1
            nxt = []
            for x in frontier:
                for y in fadj[x]:
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return t in seen and d < limit

    def can_decide(u, v, w):
        return split_girth is None or not decided.dist_below(u, v, split_girth - w)

    def capacity_ok():
        for x in range(n):
            need = a - fdeg[x]
            if need == 0:
                continue
            avail = sum(1 for y in nbrs[x] if _e(x, y) not in status and fdeg[y] < a)
            if avail < need:
                return False
        return True

    def rec():
        stats.nodes += 1
        if stats.nodes > budget:
            raise _Budget
        v = next((x for x in range(n) if fdeg[x] < a or any(_e(x, y) not in status for y in nbrs[x])), None)
        if v is None:
            fs = frozenset(F)
            if accept is None or accept(fs):
                return fs
            stats.rejected += 1
            return None
        need = a - fdeg[v]
        cands = [y for y in nbrs[v] if _e(v, y) not in status]
        return choose(v, cands, 0, need)

    def choose(v, cands, i, need):
        if need == 0:
            # remaining undecided edges at v leave the factor
            rest = [y for y in cands[i:] if _e(v, y) not in status]
            done = []
            ok = True
            for y in rest:
                if not can_decide(v, y, other_weight):
                    ok = False
                    break
                status[_e(v, y)] = 0
                decided.add(v, y, other_weight)
                done.append(y)
            res = rec() if ok and capacity_ok() else None
            for y in done:
                del status[_e(v, y)]
                decided.remove(v, y)
            return res
        if len(cands) - i < need:
            return None
        y = cands[i]
        e = _e(v, y)
        if fdeg[y] < a and can_decide(v, y, factor_weight) and not (
                min_girth is not None and factor_dist_below(v, y, min_girth - 1)):
            status[e] = 1
            fdeg[v] += 1
            fdeg[y] += 1
            F.append(e)
            fadj[v].add(y)
            fadj[y].add(v)
            decided.add(v, y, factor_weight)
            res = choose(v, cands, i + 1, need - 1)
            decided.remove(v, y)
            fadj[v].discard(y)
            fadj[y].discard(v)
            F.pop()
            fdeg[v] -= 1
            fdeg[y] -= 1
            del status[e]
            if res is not None:
                return res
        # skip y: it leaves the factor
        if not can_decide(v, y, other_weight):
            return None
        status[e] = 0
        decided.add(v, y, other_weight)
        res = choose(v, cands, i + 1, need) if capacity_ok() else None
        decided.remove(v, y)
        del status[e]
        return res

    try:
        res = rec()
    except _Budget:
        return None
    stats.exhausted = res is None
    return res


def _cycle_edges(cyc) -> frozenset[Edge]:
    return frozenset(_e(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


def hamiltonian_cycle(
    X: WGraph,
    *,
    budget: int = 1_000_000,
    accept=None,
    split_girth: int | None = None,
    factor_weight: int = LIGHT,
    stats: FactorStats | None = None,
) -> tuple[int, ...] | None:
    """A Hamiltonian cycle of ``X`` starting at vertex 0, or ``None``.

    Path extension in increasing neighbour order, pruning when an
    unvisited vertex keeps fewer than two usable neighbours.
    """
    stats = stats if stats is not None else FactorStats()
    n = X.n
    if n < 3:
        stats.exhausted = True
        return None
    light, heavy = X.adjacency()
    nbrs = [sorted(set(light[x]) | set(heavy[x])) for x in range(n)]
    if any(len(s) < 2 for s in nbrs):
        stats.exhausted = True
        return None
    other_weight = HEAVY if factor_weight == LIGHT else LIGHT
    on_path = [False] * n
    path = [0]
    on_path[0] = True
    decided = _Decided(n)
    # edges at an interior path vertex are fully decided
    interior_other: list[list[int]] = []

    def usable(x):
        return sum(1 for y in nbrs[x] if not on_path[y] or y == path[-1] or y == 0)

    def close_interior(x):
        """Mark the non-path edges at the new interior vertex ``x``."""
        added = []
        for y in nbrs[x]:
            if y in decided.adj[x]:
                continue
            if on_path[y] and y != path[-1]:
                # y is interior or the start; edge x-y is not on the cycle
                if split_girth is not None and decided.dist_below(x, y, split_girth - other_weight):
                    for z in added:
                        decided.remove(x, z)
                    return None
                decided.add(x, y, other_weight)
                added.append(y)
        return added

    def rec():
        stats.nodes += 1
        if stats.nodes > budget:
            raise _Budget
        last = path[-1]
        if len(path) == n:
            if 0 not in nbrs[last]:
                return None
            cyc = tuple(path)
            if split_girth is not None:
                G = split_cage(X, _cycle_edges(cyc), factor_weight=factor_weight, check_window=False).graph
                if wgirth(G) < split_girth:
                    stats.rejected += 1
                    return None
            if accept is None or accept(cyc):
                return cyc
            stats.rejected += 1
            return None
        for y in nbrs[last]:
            if on_path[y]:
                continue
            if split_girth is not None and decided.dist_below(last, y, split_girth - factor_weight):
                continue
            on_path[y] = True
            path.append(y)
            decided.add(last, y, factor_weight)
            added = close_interior(last) if len(path) > 2 else []
            ok = added is not None and all(usable(x) >= 2 for x in nbrs[last] if not on_path[x])
            if ok:
                res = rec()
                if res is not None:
                    return res
            if added:
                for z in added:
                    decided.remove(last, z)
            decided.remove(last, y)
            path.pop()
            on_path[y] = False
        return None

    try:
        res = rec()
    except _Budget:
        return None
    stats.exhausted = res is None
    return res


@dataclass(frozen=True)
class SplitResult:
    graph: WGraph
    a: int
    b: int
    girth: float
    window: tuple[int, int] = field(default=(0, 0))


def split_cage(X, F, *, factor_weight: int = LIGHT, check_window: bool = True) -> SplitResult:
    """G = (F, X - F), or (X - F, F) when ``factor_weight`` is HEAVY.

    ``X`` is a plain regular graph or a catalog record.  The measured girth
    must lie in [g', 2g'], and in [g'+1, 2g'] when the light part has
    girth above g'.
    """
    if hasattr(X, "graph"):
        X = X.graph
    edges = set(X.light_edges)
    F = {_e(u, v) for u, v in F}
    if not F <= edges:
        raise ValueError("F is not a subgraph of X")
    degF = [0] * X.n
    for u, v in F:
        degF[u] += 1
        degF[v] += 1
    if len(set(degF)) > 1:
        raise ValueError("F is not a factor (irregular)")
    k = degF[0] if degF else 0
    degs = {dl for dl, _ in X.degrees()}
    if len(degs) > 1:
        raise ValueError("X is not regular")
    r = degs.pop() if degs else 0
    rest = sorted(edges - F)
    if factor_weight == LIGHT:
        G = WGraph.from_edges(X.n, sorted(F), rest)
        a, b = k, r - k
    else:
        G = WGraph.from_edges(X.n, rest, sorted(F))
        a, b = r - k, k
    g = wgirth(G)
    gp = wgirth(X)
    window = (gp, 2 * gp)
    if check_window:
        lo = gp
        if wgirth(G.light_graph()) > gp:
            lo = gp + 1
        if not (lo <= g <= 2 * gp):
            raise AssertionError(f"split girth {g} outside [{lo}, {2 * gp}]")
        window = (lo, 2 * gp)
    return SplitResult(G, a, b, g, window)


@dataclass(frozen=True)
class HamiltonianMooreBound:
    bound: int
    window: tuple[int, int]
    girth: int
    graph: WGraph
    cycle: tuple[int, ...]


def _six_cycle_one_off(X: WGraph, C: frozenset[Edge]) -> bool:
    """Whether X has a 6-cycle with exactly one edge off the cycle C."""
    nbrs = X.adjacency()[0]

    def dfs(path, off):
        if len(path) == 6:
            e = _e(path[-1], path[0])
            if path[0] in nbrs[path[-1]]:
                return off + (e not in C) == 1
            return False
        for y in nbrs[path[-1]]:
            if y in path or y < path[0]:
                continue
            o = off + (_e(path[-1], y) not in C)
            if o <= 1 and dfs(path + [y], o):
                return True
        return False

    return any(dfs([s], 0) for s in range(X.n))


def hamiltonian_moore_bound(r: int, g_prime: int, catalog=None, budget: int = 1_000_000) -> HamiltonianMooreBound:
    """Upper bound n(2, r-2, g) <= n0(r, g') from a Hamiltonian Moore (r, g')-cage.

    The window is g'+1 <= g <= 3g'/2 - 1; the actual g is measured on the
    split.  For g' = 6 it is cross-checked against the 6-cycle criterion
    (7 when some 6-cycle has all but one edge on the Hamiltonian cycle,
    8 otherwise).
    """
    if r < 3 or g_prime % 2:
        raise ValueError("need r >= 3 and even g'")
    if catalog is None:
        from ..catalog import default_catalog
        catalog = default_catalog()
    rec = catalog.get_cage(r, g_prime)
    bound = n0(r, 0, g_prime)
    if rec is None or rec.order != bound:
        raise ValueError(f"no Moore ({r},{g_prime})-cage in the catalog")
    X = rec.graph
    cyc = rec.hamiltonian_cycle or hamiltonian_cycle(X, budget=budget)
    if cyc is None:
        raise ValueError(f"no Hamiltonian cycle found for the ({r},{g_prime})-cage")
    C = _cycle_edges(cyc)
    res = split_cage(X, C)
    window = (g_prime + 1, 3 * g_prime // 2 - 1)
    g = int(res.girth)
    if not window[0] <= g <= window[1]:
        raise AssertionError(f"girth {g} outside {window}")
    if g_prime == 6:
        expected = 7 if _six_cycle_one_off(X, C) else 8
        if g != expected:
            raise AssertionError(f"6-cycle criterion predicts {expected}, measured {g}")
    assert is_regular(res.graph, r)
    return HamiltonianMooreBound(bound, window, g, res.graph, tuple(cyc))
