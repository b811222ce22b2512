"""Canonical labelling of wgraphs by individualization-refinement.

The wgraph is treated as a complete graph whose pairs carry one of three
colours (none, light, heavy).  Colour refinement by neighbour-colour counts
gives an equitable ordered partition; non-discrete partitions are split by
individualizing each vertex of the first smallest non-singleton cell.  Every
leaf of this tree yields a relabelled edge list, and the certificate is the
lexicographically smallest encoding.  Automorphisms found along the way
prune children lying in an orbit already explored.
"""

from __future__ import annotations

import struct

from .wgraph import WGraph


def _refine(colors: list[int], nbrs: list[list[tuple[int, int]]]) -> list[int]:
    ncol = len(set(colors))
    while True:
        sigs = [
            (colors[x], tuple(sorted((colors[y], w) for y, w in nbrs[x])))
            for x in range(len(colors))
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == ncol:
            return new
        colors, ncol = new, len(rank)


def _encode(n: int, edges: list[tuple[int, int, int]], perm: list[int]) -> bytes:
    out = []
    for u, v, w in edges:
        pu, pv = perm[u], perm[v]
        if pu > pv:
            pu, pv = pv, pu
        out.append((w, pu, pv))
    out.sort()
    flat = [n, len(out)]
    for t in out:
        flat.extend(t)
    return b"WC1" + struct.pack(f">{len(flat)}I", *flat)


class _Canon:
    def __init__(self, G: WGraph):
        self.n = G.n
        light, heavy = G.adjacency()
        self.nbrs = [[(y, 1) for y in light[x]] + [(y, 2) for y in heavy[x]] for x in range(G.n)]
        self.edges = G.edges
        self.best: bytes | None = None
        self.best_perm: list[int] | None = None
        self.first_perm: list[int] | None = None
        self.first: bytes | None = None
        self.autos: list[list[int]] = []

    def run(self):
        colors = [0] * self.n
        self._search(colors, [])
        return self.best, self.best_perm

    def _orbit_roots(self, seq: list[int]) -> list[int]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gam in self.autos:
            if all(gam[s] == s for s in seq):
                for x in range(self.n):
                    rx, ry = find(x), find(gam[x])
                    if rx != ry:
                        parent[max(rx, ry)] = min(rx, ry)
        return [find(x) for x in range(self.n)]

    def _leaf(self, colors: list[int]):
        perm = colors
        code = _encode(self.n, self.edges, perm)
        if self.first is None:
            self.first, self.first_perm = code, perm
        elif code == self.first:
            self._add_auto(self.first_perm, perm)
        if self.best is None or code < self.best:
            self.best, self.best_perm = code, perm
        elif code == self.best:
            self._add_auto(self.best_perm, perm)

    def _add_auto(self, p: list[int], q: list[int]):
        # x -> q^{-1}(p(x)) maps the graph onto itself
        qinv = [0] * self.n
        for x, y in enumerate(q):
            qinv[y] = x
        gam = [qinv[p[x]] for x in range(self.n)]
        if any(gam[x] != x for x in range(self.n)):
            self.autos.append(gam)

    def _search(self, colors: list[int], seq: list[int]):
        colors = _refine(colors, self.nbrs)
        ncol = max(colors) + 1 if colors else 0
        if ncol == self.n:
            self._leaf(colors)
            return
        cells: dict[int, list[int]] = {}
        for x, c in enumerate(colors):
            cells.setdefault(c, []).append(x)
        target = min((c for c in cells if len(cells[c]) > 1), key=lambda c: (len(cells[c]), c))
        explored_roots: set[int] = set()
        for v in cells[target]:
            if explored_roots:
                roots = self._orbit_roots(seq)
                if roots[v] in {roots[u] for u in explored_roots}:
                    continue
            child = [2 * c + (1 if c == target and x != v else 0) for x, c in enumerate(colors)]
            self._search(child, seq + [v])
            explored_roots.add(v)


def canonical_labeling(G: WGraph) -> tuple[bytes, list[int]]:
    """Return ``(certificate, perm)`` where ``G.relabel(perm)`` is canonical."""
    if G.n == 0:
        return _encode(0, [], []), []
    code, perm = _Canon(G).run()
    return code, list(perm)


def canonical_certificate(G: WGraph) -> bytes:
    """Byte string equal for two wgraphs iff they are isomorphic (weights respected)."""
    return canonical_labeling(G)[0]


def canonical_form(G: WGraph) -> WGraph:
    return G.relabel(canonical_labeling(G)[1])
