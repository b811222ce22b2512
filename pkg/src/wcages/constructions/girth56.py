"""Optimal (a,b,5)- and (a,b,6)-wgraphs for a in {1, 2}."""

from __future__ import annotations

import itertools

from ..wgraph import WGraph
from .factorizations import _e, one_factorization


def n_g56(a: int, b: int, g: int):
    """Closed-form order for the families below; ``None`` outside them."""
    if g == 5 and a == 1 and b >= 2:
        return b + 2 if b % 2 == 0 else b + 3
    if g == 5 and a == 2:
        return b + 5
    if g == 6 and a == 1 and b >= 1:
        return 2 * b + 2
    if g == 6 and a == 2:
        return 2 * b + 6
    return None


def g56_case(a: int, b: int, g: int) -> int | None:
    if g == 5 and a == 1 and b >= 2:
        return 1 if b % 2 == 0 else 2
    if g == 5 and a == 2:
        return 3
    if g == 6 and a == 1 and b >= 1:
        return 4
    if g == 6 and a == 2:
        return 5
    return None


def construct_g56(a: int, b: int, g: int) -> WGraph:
    case = g56_case(a, b, g)
    if case is None:
        raise ValueError(f"({a},{b},{g}) is outside the girth 5/6 families")
    n = n_g56(a, b, g)
    if case in (1, 2):
        fac = one_factorization(n)
        light = sorted(fac.factors[0])
        if case == 1:
            heavy = [e for e in itertools.combinations(range(n), 2) if e not in fac.factors[0]]
        else:
            heavy = sorted(fac.union(range(1, n - 2)))
        return WGraph.from_edges(n, light, heavy)
    if case == 3:
        light = [_e(i, (i + 1) % n) for i in range(n)]
        square = set(light) | {_e(i, (i + 2) % n) for i in range(n)}
        heavy = [e for e in itertools.combinations(range(n), 2) if e not in square]
        return WGraph.from_edges(n, light, heavy)
    m = n // 2
    if case == 4:
        heavy = list(itertools.combinations(range(m), 2))
        heavy += [(u + m, v + m) for u, v in itertools.combinations(range(m), 2)]
        return WGraph.from_edges(n, [(i, i + m) for i in range(m)], heavy)
    # u_i = i, v_i = m + i; light zigzag u_i v_i, v_i u_{i+1}
    cyc = {_e(i, (i + 1) % m) for i in range(m)}
    heavy = []
    for off in (0, m):
        heavy += [(u + off, v + off) for u, v in itertools.combinations(range(m), 2) if (u, v) not in cyc]
    light = [(i, m + i) for i in range(m)] + [_e(m + i, (i + 1) % m) for i in range(m)]
    return WGraph.from_edges(n, light, heavy)
