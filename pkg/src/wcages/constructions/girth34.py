"""Optimal wgraphs of girth 3 and 4, and a-regular graphs of girth 4."""

from __future__ import annotations

import enum
import itertools

from ..wgraph import WGraph
from .factorizations import (
    _e,
    one_factorization,
    one_factorization_bipartite,
    two_factorization,
)


class _Nonexistent(enum.Enum):
    NONEXISTENT = "nonexistent"

    def __repr__(self):
        return "NONEXISTENT"

    __str__ = __repr__


NONEXISTENT = _Nonexistent.NONEXISTENT


def _complement_pair(n: int, light) -> WGraph:
    light = {_e(u, v) for u, v in light}
    heavy = [e for e in itertools.combinations(range(n), 2) if e not in light]
    return WGraph.from_edges(n, sorted(light), heavy)


def _cycle(vertices) -> list[tuple[int, int]]:
    vs = list(vertices)
    return [_e(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


# ---------------------------------------------------------------------------
# girth 3
# ---------------------------------------------------------------------------

def n_g3(a: int, b: int):
    """Closed form of n(a,b,3); ``None`` when infinite."""
    if a < 2:
        return None
    if a == 2:
        return 6 if b in (1, 2) else a + b + 1
    return a + b + 2 if (a * b) % 2 else a + b + 1


def construct_g3(a: int, b: int):
    """An (a,b,3)-wcage, or ``NONEXISTENT`` when a < 2."""
    if a < 2:
        return NONEXISTENT
    if a == 2 and b in (1, 2):
        light = _cycle([0, 1, 2]) + _cycle([3, 4, 5])
        heavy = [(0, 3), (1, 4), (2, 5)] if b == 1 else _cycle([0, 3, 1, 4, 2, 5])
        return WGraph.from_edges(6, light, heavy)
    if a == 2:
        n = b + 3
        if b == 0:
            return WGraph.plain(3, _cycle(range(3)))
        return _complement_pair(n, _cycle(range(3)) + _cycle(range(3, n)))
    if (a * b) % 2 == 0:
        n = a + b + 1
        if a % 2 == 0 and b % 2 == 0:
            fac = two_factorization(n)
            light = fac.union(range(a // 2))
        else:
            light = one_factorization(n).union(range(a))
        return _complement_pair(n, light)
    n = a + b + 2
    fac = one_factorization(n)
    return WGraph.from_edges(n, sorted(fac.union(range(a))), sorted(fac.union(range(a, n - 2))))


# ---------------------------------------------------------------------------
# girth 4
# ---------------------------------------------------------------------------

def n_g4(a: int, b: int):
    """Closed form of n(a,b,4); ``None`` when infinite."""
    if a < 2:
        return None
    if a == 2:
        return 2 * a if b == 0 else a + b + 1
    if a > b:
        return 2 * a + 2 if (a * b) % 2 else 2 * a
    if a % 2 != b % 2:
        return a + b + 1
    if a % 2 == 1:
        return a + b + 2
    return a + b + 2 if 2 * b <= 3 * a - 4 else a + b + 1


def g4_case(a: int, b: int) -> int:
    """Index 1..9 of the girth-4 case containing (a, b)."""
    if a < 2:
        return 1
    if a == 2:
        return 2 if b == 0 else 3
    if a > b:
        return 5 if (a * b) % 2 else 4
    if a % 2 != b % 2:
        return 6
    if a % 2 == 1:
        return 7
    return 8 if 2 * b <= 3 * a - 4 else 9


def _regular_on(vertices: list[int], r: int) -> list[tuple[int, int]]:
    """An r-regular graph on ``vertices`` with r < len(vertices) (r*len even)."""
    m = len(vertices)
    if r == 0:
        return []
    if m == 3:
        return [_e(vertices[i], vertices[j]) for i, j in ((0, 1), (1, 2), (0, 2))]
    if m % 2 == 0:
        fac = one_factorization(m)
        edges = fac.union(range(r))
    else:
        fac = two_factorization(m)
        edges = fac.union(range(r // 2))
    return [_e(vertices[u], vertices[v]) for u, v in edges]


def leqab2(a: int, b: int) -> WGraph:
    """(a,b,4)-wgraph on a+b+2 vertices for 3 <= a <= b with a, b of equal parity."""
    n = a + b + 2
    m = n // 2
    fac = one_factorization_bipartite(m)
    light = fac.union(range(a))
    heavy = set(itertools.combinations(range(m), 2))
    heavy |= set(itertools.combinations(range(m, 2 * m), 2))
    heavy |= fac.union(range(a, m - 1))
    return WGraph.from_edges(n, sorted(light), sorted(heavy))


def block_girth4(a: int, n: int) -> list[tuple[int, int]]:
    """Triangle-free a-regular graph with girth 4 on n >= 5a/2 vertices, a even >= 4.

    Write n = 5a/2 + (a/2) r + k with 0 <= k < a/2.  For r = 0 the vertices
    form five independent blocks of sizes a/2+k, a/2+k, a/2, a/2, a/2-k
    arranged on a 5-cycle; for r >= 1 a block of size k and r extra blocks
    of size a/2 are used.  Solid joins are complete bipartite and the
    remaining joins are unions of cyclic matchings.
    """
    if a % 2 or a < 4 or 2 * n < 5 * a:
        raise ValueError("need even a >= 4 and n >= 5a/2")
    h = a // 2
    r, k = divmod(n - 5 * h, h)
    blocks: list[list[int]] = []

    def block(size):
        start = sum(len(x) for x in blocks)
        blocks.append(list(range(start, start + size)))
        return len(blocks) - 1

    edges: set[tuple[int, int]] = set()

    def join(i, j):
        edges.update(_e(u, v) for u in blocks[i] for v in blocks[j])

    def matched(i, j, s):
        # s-regular bipartite graph between equal blocks
        m = len(blocks[i])
        edges.update(_e(blocks[i][x], blocks[j][(x + t) % m]) for t in range(s) for x in range(m))

    if r == 0:
        b1, b2 = block(h + k), block(h + k)
        c3, c4 = block(h), block(h)
        b5 = block(h - k)
        matched(b1, b2, h)
        join(b1, c3)
        join(c3, b5)
        join(b5, c4)
        join(c4, b2)
    else:
        n1 = block(k)
        n2, n3, n4, n5, n6 = (block(h) for _ in range(5))
        grays = [block(h) for _ in range(r)]
        matched(n2, n4, h - k)
        matched(n4, n5, k)
        matched(n5, n3, h - k)
        join(n2, n1)
        join(n1, n3)
        join(n3, n6)
        join(n6, n4)
        path = [n5] + grays + [n2]
        for i, j in zip(path, path[1:]):
            join(i, j)
    assert sum(len(x) for x in blocks) == n
    return sorted(edges)


def construct_g4(a: int, b: int):
    """An (a,b,4)-wcage, or ``NONEXISTENT`` when a < 2."""
    case = g4_case(a, b)
    if case == 1:
        return NONEXISTENT
    if case == 2:
        return WGraph.plain(4, _cycle(range(4)))
    if case == 3:
        n = a + b + 1
        return _complement_pair(n, _cycle(range(n)))
    if case == 4:
        light = [(x, a + y) for x in range(a) for y in range(a)]
        heavy = _regular_on(list(range(a)), b) + _regular_on(list(range(a, 2 * a)), b)
        return WGraph.from_edges(2 * a, light, heavy)
    if case == 5:
        m = a + 1
        light = [(x, m + y) for x in range(m) for y in range(m) if x != y]
        fac = one_factorization(m)
        heavy = []
        for off in (0, m):
            heavy += [(u + off, v + off) for u, v in fac.union(range(b))]
        return WGraph.from_edges(2 * m, light, heavy)
    if case == 6:
        n = a + b + 1
        return _complement_pair(n, one_factorization_bipartite(n // 2).union(range(a)))
    if case in (7, 8):
        return leqab2(a, b)
    return _complement_pair(a + b + 1, block_girth4(a, a + b + 1))


def triangle_forced(a: int, n: int) -> bool:
    """True when every a-regular graph on n vertices must contain a triangle.

    This is the window a even, n odd, 2a < n < 5a/2.  It is used as a
    checked claim, not derived here.
    """
    return a % 2 == 0 and n % 2 == 1 and 2 * a < n and 2 * n < 5 * a


def a_regular_girth4(a: int, n: int):
    """An a-regular graph (all light) of girth 4 on n vertices, or ``NONEXISTENT``."""
    if a < 3:
        raise ValueError("a_regular_girth4 needs a >= 3")
    if n % 2 == 0 and n >= 2 * a:
        return WGraph.plain(n, one_factorization_bipartite(n // 2).union(range(a)))
    if n % 2 == 1 and a % 2 == 0 and 2 * n >= 5 * a:
        return WGraph.plain(n, block_girth4(a, n))
    return NONEXISTENT
