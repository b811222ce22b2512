"""Cyclic factorizations of K_n and K_{m,m}."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

Edge = tuple[int, int]


class Host(enum.Enum):
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"


@dataclass(frozen=True)
class Factorization:
    """Edge-disjoint k-factors whose union is the host graph.

    For ``COMPLETE_BIPARTITE`` hosts the parts are ``X = 0..m-1`` and
    ``Y = m..2m-1`` (vertex ``y_j`` is ``m + j``).
    """

    host: Host
    order: int
    k: int
    factors: tuple[frozenset[Edge], ...]

    def host_edges(self) -> set[Edge]:
        if self.host is Host.COMPLETE:
            return set(itertools.combinations(range(self.order), 2))
        m = self.order // 2
        return {(x, m + y) for x in range(m) for y in range(m)}

    def union(self, indices) -> set[Edge]:
        out: set[Edge] = set()
        for i in indices:
            out |= self.factors[i]
        return out


def _e(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def two_factorization(n: int) -> Factorization:
    """F_i = {x, x+i} over Z_n for i = 1..(n-1)/2; stored 0-based as factors[i-1]."""
    if n < 5 or n % 2 == 0:
        raise ValueError(f"two_factorization needs odd n >= 5, got {n}")
    factors = tuple(frozenset(_e(x, (x + i) % n) for x in range(n)) for i in range(1, (n - 1) // 2 + 1))
    return Factorization(Host.COMPLETE, n, 2, factors)


def one_factorization(n: int) -> Factorization:
    """Near-cyclic 1-factorization of K_n; the fixed vertex * is ``n - 1``.

    F~_i = {*, i} together with {i+k, i-k} over Z_{n-1}, k = 1..(n-2)/2.
    """
    if n < 4 or n % 2:
        raise ValueError(f"one_factorization needs even n >= 4, got {n}")
    q = n - 1
    star = n - 1
    factors = []
    for i in range(q):
        f = {_e(star, i)}
        f |= {_e((i + k) % q, (i - k) % q) for k in range(1, (n - 2) // 2 + 1)}
        factors.append(frozenset(f))
    return Factorization(Host.COMPLETE, n, 1, tuple(factors))


def one_factorization_bipartite(m: int) -> Factorization:
    """F^_i = {x_j y_{j+i}} in K_{m,m}."""
    if m < 3:
        raise ValueError(f"one_factorization_bipartite needs m >= 3, got {m}")
    factors = tuple(frozenset((j, m + (j + i) % m) for j in range(m)) for i in range(m))
    return Factorization(Host.COMPLETE_BIPARTITE, 2 * m, 1, factors)


def cyclic_matchings(m: int, shifts) -> set[Edge]:
    """Union of the matchings x_j y_{j+i} (i in ``shifts``) between two m-sets, m >= 1.

    Works for any m, unlike :func:`one_factorization_bipartite`.
    """
    return {(j, m + (j + i) % m) for i in shifts for j in range(m)}
