"""Weighted graphs with light (weight 1) and heavy (weight 2) edges.

A :class:`WGraph` is a pair of edge-disjoint spanning graphs ``(L, H)`` on the
vertex set ``range(n)``.  Edge sets are stored as bitsets (Python ints) over
the ``n(n-1)/2`` unordered pairs in row-major ``u < v`` order.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

import numpy as np

INF = math.inf

LIGHT = 1
HEAVY = 2

Edge = tuple[int, int]


def pair_index(n: int, u: int, v: int) -> int:
    """Row-major index of the unordered pair ``{u, v}`` among n(n-1)/2 pairs."""
    if u > v:
        u, v = v, u
    return u * n - u * (u + 1) // 2 + (v - u - 1)


@lru_cache(maxsize=64)
def _row_starts(n: int) -> np.ndarray:
    """Index of the first pair ``(u, u+1)`` for each row u."""
    u = np.arange(n, dtype=np.int64)
    return u * n - u * (u + 1) // 2


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Params:
    """Target light degree ``a``, heavy degree ``b`` and weighted girth ``g``."""

    a: int
    b: int
    g: int

    def __iter__(self):
        return iter((self.a, self.b, self.g))

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.g})"


@dataclass(frozen=True, eq=False)
class WGraph:
    n: int
    light_bits: int = 0
    heavy_bits: int = 0
    _adj: tuple = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if self.light_bits & self.heavy_bits:
            raise ValueError("light and heavy edge sets must be disjoint")
        top = self.n * (self.n - 1) // 2
        if (self.light_bits | self.heavy_bits) >> top:
            raise ValueError("edge bitset exceeds pair range")

    # -- construction -------------------------------------------------
    @classmethod
    def from_edges(cls, n: int, light: Iterable[Edge] = (), heavy: Iterable[Edge] = ()) -> "WGraph":
        lb = cls._bits(n, light, "light")
        hb = cls._bits(n, heavy, "heavy")
        return cls(n, lb, hb)

    @staticmethod
    def _bits(n: int, edges: Iterable[Edge], kind: str) -> int:
        seen: set[int] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"{kind} edge ({u},{v}) out of range for n={n}")
            i = pair_index(n, u, v)
            if i in seen:
                raise ValueError(f"duplicate {kind} edge ({u},{v})")
            seen.add(i)
        if not seen:
            return 0
        # set bits through a byte buffer; OR-ing into a big int per edge is quadratic
        top = n * (n - 1) // 2
        flags = np.zeros(top, dtype=np.uint8)
        flags[np.fromiter(seen, dtype=np.int64, count=len(seen))] = 1
        return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")

    @classmethod
    def plain(cls, n: int, edges: Iterable[Edge]) -> "WGraph":
        """An ordinary graph, encoded with every edge light."""
        return cls.from_edges(n, light=edges)

    # -- edge access --------------------------------------------------
    def _decode(self, bits: int) -> list[Edge]:
        if not bits:
            return []
        n = self.n
        raw = np.frombuffer(bits.to_bytes((bits.bit_length() + 7) // 8, "little"), dtype=np.uint8)
        idx = np.flatnonzero(np.unpackbits(raw, bitorder="little"))
        starts = _row_starts(n)
        us = np.searchsorted(starts, idx, side="right") - 1
        vs = idx - starts[us] + us + 1
        return list(zip(us.tolist(), vs.tolist()))

    @property
    def light_edges(self) -> list[Edge]:
        return self._decode(self.light_bits)

    @property
    def heavy_edges(self) -> list[Edge]:
        return self._decode(self.heavy_bits)

    @property
    def edges(self) -> list[tuple[int, int, int]]:
        """All edges as ``(u, v, w)`` sorted by ``(w, u, v)``."""
        return [(u, v, LIGHT) for u, v in self.light_edges] + [(u, v, HEAVY) for u, v in self.heavy_edges]

    def weight(self, u: int, v: int) -> int:
        """Weight of edge ``uv`` or 0 if absent."""
        if u == v:
            return 0
        bit = 1 << pair_index(self.n, u, v)
        if self.light_bits & bit:
            return LIGHT
        if self.heavy_bits & bit:
            return HEAVY
        return 0

    def adjacency(self) -> tuple[list[list[int]], list[list[int]]]:
        """Sorted light and heavy neighbour lists (cached)."""
        if self._adj is None:
            light = [[] for _ in range(self.n)]
            heavy = [[] for _ in range(self.n)]
            for u, v in self.light_edges:
                light[u].append(v)
                light[v].append(u)
            for u, v in self.heavy_edges:
                heavy[u].append(v)
                heavy[v].append(u)
            for lst in light + heavy:
                lst.sort()
            object.__setattr__(self, "_adj", (light, heavy))
        return self._adj

    def light_graph(self) -> "WGraph":
        return WGraph(self.n, self.light_bits, 0)

    def heavy_graph(self) -> "WGraph":
        """The heavy subgraph re-encoded as a plain (all-light) graph."""
        return WGraph(self.n, self.heavy_bits, 0)

    def num_edges(self) -> int:
        return self.light_bits.bit_count() + self.heavy_bits.bit_count()

    def degrees(self) -> list[tuple[int, int]]:
        light, heavy = self.adjacency()
        return [(len(light[x]), len(heavy[x])) for x in range(self.n)]

    def relabel(self, perm: list[int]) -> "WGraph":
        """Graph with vertex ``x`` renamed ``perm[x]``."""
        return WGraph.from_edges(
            self.n,
            light=[(perm[u], perm[v]) for u, v in self.light_edges],
            heavy=[(perm[u], perm[v]) for u, v in self.heavy_edges],
        )

    def __eq__(self, other):
        if not isinstance(other, WGraph):
            return NotImplemented
        return (self.n, self.light_bits, self.heavy_bits) == (other.n, other.light_bits, other.heavy_bits)

    def __hash__(self):
        return hash((self.n, self.light_bits, self.heavy_bits))

    def __len__(self):
        return self.n


# ---------------------------------------------------------------------------
# girth and distance
# ---------------------------------------------------------------------------

def _subdivided(G: WGraph) -> list[list[int]]:
    """Unit-weight graph: heavy edges get an auxiliary midpoint vertex."""
    light, _ = G.adjacency()
    adj = [list(nb) for nb in light]
    for u, v in G.heavy_edges:
        m = len(adj)
        adj.append([u, v])
        adj[u].append(m)
        adj[v].append(m)
    return adj


def wgirth(G: WGraph) -> float:
    """Minimum weight of a cycle of ``G`` (``INF`` if acyclic).

    BFS from every original vertex of the subdivided graph; a non-tree edge
    ``xy`` closes a walk of length ``d[x] + d[y] + 1`` which contains a cycle
    no longer than that, and the bound is attained from any vertex on a
    shortest cycle.
    """
    if G.num_edges() < 3:
        return INF
    adj = _subdivided(G)
    total = len(adj)
    best = INF
    for s in range(G.n):
        if not adj[s]:
            continue
        dist = [-1] * total
        parent = [-1] * total
        dist[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            dx = dist[x]
            if 2 * dx >= best:
                break
            for y in adj[x]:
                if dist[y] < 0:
                    dist[y] = dx + 1
                    parent[y] = x
                    q.append(y)
                elif y != parent[x]:
                    c = dx + dist[y] + 1
                    if c < best:
                        best = c
        if best <= 3:
            break
    return best


def wdistance(G: WGraph, u: int, v: int) -> float:
    """Minimum weight of a path between ``u`` and ``v`` (``INF`` if none)."""
    n = G.n
    if not (0 <= u < n and 0 <= v < n):
        raise IndexError(f"vertex out of range for n={n}")
    if u == v:
        return 0
    light, heavy = G.adjacency()
    dist = [INF] * n
    dist[u] = 0
    pq = [(0, u)]
    while pq:
        d, x = heapq.heappop(pq)
        if x == v:
            return d
        if d > dist[x]:
            continue
        for w, nbrs in ((LIGHT, light[x]), (HEAVY, heavy[x])):
            for y in nbrs:
                nd = d + w
                if nd < dist[y]:
                    dist[y] = nd
                    heapq.heappush(pq, (nd, y))
    return INF


def is_biregular(G: WGraph, a: int, b: int) -> bool:
    """True iff every vertex has exactly ``a`` light and ``b`` heavy neighbours."""
    return all(d == (a, b) for d in G.degrees())


def verify_witness(G: WGraph, p: Params) -> bool:
    """True iff ``G`` is ``(a, b)``-regular with weighted girth exactly ``g``."""
    return is_biregular(G, p.a, p.b) and wgirth(G) == p.g


def is_regular(G: WGraph, r: int) -> bool:
    """Plain-graph regularity: every vertex has total degree ``r``."""
    return all(x + y == r for x, y in G.degrees())


def complement(G: WGraph) -> WGraph:
    """Plain complement of the underlying (light plus heavy) graph."""
    full = (1 << (G.n * (G.n - 1) // 2)) - 1
    return WGraph(G.n, full & ~(G.light_bits | G.heavy_bits), 0)


def max_degree(G: WGraph) -> int:
    return max((x + y for x, y in G.degrees()), default=0)
