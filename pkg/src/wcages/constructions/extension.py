"""Extension lemma, the generic existence construction and upper-bound builders."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from ..wgraph import HEAVY, LIGHT, Params, WGraph, max_degree, verify_witness, wgirth
from .factorizations import _e


class UnsupportedParameters(ValueError):
    """An auxiliary regular graph of the required degree and girth is unavailable."""


@dataclass(frozen=True)
class SemidirectWitness:
    """``Z`` is |Y| disjoint copies of ``X`` plus one external edge per edge of ``Y``.

    Vertex ``(x, y)`` of Z is numbered ``y * |X| + x`` and ``fiber_map[z] = z // |X|``.
    """

    Z: WGraph
    X: WGraph
    Y: WGraph
    fiber_map: tuple[int, ...]
    external_edges: tuple[tuple[int, int], ...]


def defect(X: WGraph, d: int) -> int:
    return d * X.n - sum(dl + dh for dl, dh in X.degrees())


def extend(X: WGraph, d: int, Y: WGraph) -> SemidirectWitness:
    """Complete the plain graph ``X`` to a d-regular graph ``Z = X x| Y``.

    ``Y`` must be D-regular where D is the defect of ``X``.  Edges of ``Y``
    are handled in sorted order; each joins the first vertex below degree
    ``d`` in either fiber.
    """
    if X.heavy_bits or Y.heavy_bits:
        raise ValueError("extend works on plain graphs (light edges only)")
    if max_degree(X) > d:
        raise ValueError(f"max degree of X exceeds d={d}")
    D = defect(X, d)
    if any(dl != D for dl, _ in Y.degrees()):
        raise ValueError(f"Y must be {D}-regular (the defect of X)")
    nx = X.n
    edges = [(y * nx + u, y * nx + v) for y in range(Y.n) for u, v in X.light_edges]
    deg = [0] * (nx * Y.n)
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    external = []
    for y1, y2 in Y.light_edges:
        z1 = next((y1 * nx + x for x in range(nx) if deg[y1 * nx + x] < d), None)
        z2 = next((y2 * nx + x for x in range(nx) if deg[y2 * nx + x] < d), None)
        if z1 is None or z2 is None:
            raise AssertionError("extension lemma: no deficient vertex left")
        deg[z1] += 1
        deg[z2] += 1
        external.append(_e(z1, z2))
    Z = WGraph.plain(nx * Y.n, edges + external)
    return SemidirectWitness(Z, X, Y, tuple(z // nx if nx else 0 for z in range(Z.n)), tuple(external))


# ---------------------------------------------------------------------------
# auxiliary regular graphs
# ---------------------------------------------------------------------------

def complete(n: int) -> WGraph:
    return WGraph.plain(n, itertools.combinations(range(n), 2))


def regular_graph(r: int, girth: int, catalog=None, search_budget: int = 0, n_max: int = 40) -> WGraph:
    """A smallest r-regular graph of girth at least ``girth``.

    Uses complete graphs where they suffice, then the cage catalog, then
    (when ``search_budget`` is positive) an exhaustive search.
    """
    if r <= 1 or girth <= 3:
        return complete(r + 1)
    if catalog is None:
        from ..catalog import default_catalog
        catalog = default_catalog()
    G = catalog.regular_graph(r, girth)
    if G is not None:
        return G
    if search_budget > 0:
        from ..search import find_regular_graph
        G = find_regular_graph(r, girth, n_max, search_budget)
        if G is not None:
            return G
    raise UnsupportedParameters(f"no {r}-regular graph of girth >= {girth} available")


def tilde_n(r: int, g: int, catalog=None):
    if catalog is None:
        from ..catalog import default_catalog
        catalog = default_catalog()
    return catalog.tilde_n(r, g)


# ---------------------------------------------------------------------------
# generic construction
# ---------------------------------------------------------------------------

def minimal_wcycle(p: Params) -> WGraph | None:
    """A wcycle of weight g with fewest edges respecting the degree caps.

    Among equally short cycles the lexicographically first weight pattern
    (light before heavy) is used.  ``None`` when no such wcycle exists.
    """
    a, b, g = p
    for k in range(3, g + 1):
        for pattern in itertools.product((LIGHT, HEAVY), repeat=k):
            if sum(pattern) != g:
                continue
            ok = True
            for i in range(k):
                pair = (pattern[i - 1], pattern[i])
                nl = pair.count(LIGHT)
                if nl > a or 2 - nl > b:
                    ok = False
                    break
            if ok:
                light = [_e(i, (i + 1) % k) for i in range(k) if pattern[i] == LIGHT]
                heavy = [_e(i, (i + 1) % k) for i in range(k) if pattern[i] == HEAVY]
                return WGraph.from_edges(k, light, heavy)
    return None


def _with_copies(Z: WGraph, other: list[tuple[int, int]], nx: int, copies: int, z_is_light: bool) -> WGraph:
    extra = [(y * nx + u, y * nx + v) for y in range(copies) for u, v in other]
    if z_is_light:
        return WGraph.from_edges(Z.n, Z.light_edges, extra)
    return WGraph.from_edges(Z.n, extra, Z.light_edges)


def build_thm_construction(p: Params, catalog=None, search_budget: int = 0) -> WGraph:
    """(a,b,g)-wgraph from a shortest wcycle by two extensions (light, then heavy)."""
    a, b, g = p
    G0 = minimal_wcycle(p)
    if G0 is None:
        raise ValueError(f"no {p}-wcycle exists")
    X0 = G0.light_graph()
    Y0 = regular_graph(defect(X0, a), g, catalog, search_budget)
    Z1 = extend(X0, a, Y0).Z
    G1 = _with_copies(Z1, G0.heavy_edges, G0.n, Y0.n, z_is_light=True)
    X1 = G1.heavy_graph()
    Y1 = regular_graph(defect(X1, b), math.ceil(g / 2), catalog, search_budget)
    Z2 = extend(X1, b, Y1).Z
    G2 = _with_copies(Z2, G1.light_edges, G1.n, Y1.n, z_is_light=False)
    if not verify_witness(G2, p):
        raise AssertionError(f"generic construction failed for {p}")
    return G2


# ---------------------------------------------------------------------------
# upper-bound builders
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundWitness:
    graph: WGraph
    bound: int
    case: str


def _cage(r: int, g: int, catalog):
    if catalog is None:
        from ..catalog import default_catalog
        catalog = default_catalog()
    rec = catalog.get_cage(r, g)
    return rec.graph if rec is not None else None


def upper_bound_builders(p: Params, catalog=None, notes: list | None = None) -> list[BoundWitness]:
    """Wgraphs for each applicable case of the four general upper bounds.

    Cases whose auxiliary cage is missing are skipped; a reason is
    appended to ``notes`` when given.
    """
    a, b, g = p
    out: list[BoundWitness] = []
    notes = notes if notes is not None else []

    def note(msg):
        notes.append(msg)

    # 1: light (a,g)-cage, heavy edges by extending the empty graph
    if a >= 2 and g >= 3:
        cage = _cage(a, g, catalog)
        if cage is None:
            note(f"case 1: ({a},{g})-cage not in catalog")
        else:
            try:
                D = b * cage.n
                Y = regular_graph(D, math.ceil(g / 2), catalog)
                Z = extend(WGraph(cage.n), b, Y).Z
                G = _with_copies(Z, cage.light_edges, cage.n, Y.n, z_is_light=False)
                out.append(BoundWitness(G, cage.n * Y.n, "1"))
            except UnsupportedParameters as exc:
                note(f"case 1: {exc}")

    # 2: heavy (b,g/2)-cage, light edges by extension
    if b >= 2 and g >= 6 and g % 2 == 0:
        cage = _cage(b, g // 2, catalog)
        if cage is None:
            note(f"case 2: ({b},{g // 2})-cage not in catalog")
        else:
            try:
                D = a * cage.n
                Y = regular_graph(D, g, catalog)
                Z = extend(WGraph(cage.n), a, Y).Z
                G = _with_copies(Z, cage.light_edges, cage.n, Y.n, z_is_light=True)
                out.append(BoundWitness(G, cage.n * Y.n, "2"))
            except UnsupportedParameters as exc:
                note(f"case 2: {exc}")

    # 3: two light cages joined by a heavy matching
    if a >= 2 and b == 1 and g <= 6:
        cage = _cage(a, g, catalog)
        if cage is None:
            note(f"case 3: ({a},{g})-cage not in catalog")
        else:
            m = cage.n
            light = cage.light_edges + [(u + m, v + m) for u, v in cage.light_edges]
            G = WGraph.from_edges(2 * m, light, [(i, i + m) for i in range(m)])
            out.append(BoundWitness(G, 2 * m, "3"))

    # 4: two heavy b-regular blocks of girth >= 3 joined by a light matching
    if a == 1 and b >= 1 and g == 6:
        block = complete(b + 1)
        m = block.n
        heavy = block.light_edges + [(u + m, v + m) for u, v in block.light_edges]
        G = WGraph.from_edges(2 * m, [(i, i + m) for i in range(m)], heavy)
        out.append(BoundWitness(G, 2 * m, "4"))

    checked = []
    for bw in out:
        if verify_witness(bw.graph, p):
            checked.append(bw)
        else:
            note(f"case {bw.case}: measured girth {wgirth(bw.graph)} differs from {g}")
    return checked
