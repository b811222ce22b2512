"""Existence test, Moore-like lower bounds and related closed forms.

The Moore-like bounds count the vertices of a weighted BFS tree whose
vertices must all be distinct in any wgraph of girth ``g``.  Level ``i``
holds the vertices at weighted distance ``i`` from the root; ``L[i]`` are
reached by a light edge from their parent and ``H[i]`` by a heavy edge::

    L[i] = (a-1) L[i-1] + a H[i-1]
    H[i] = (b-1) H[i-2] + b L[i-2]

Three base cases exist: a single root (odd girth), a light root edge and a
heavy root edge (even girth).
"""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass

from .wgraph import INF, Params, WGraph, verify_witness


class Base(enum.Enum):
    ODD = "odd"
    EVEN_LIGHT = "even_light"
    EVEN_HEAVY = "even_heavy"


_BASES = {
    Base.ODD: lambda a: ((1, 0), (a, 0)),
    Base.EVEN_LIGHT: lambda a: ((2, 0), (2 * (a - 1), 0)),
    Base.EVEN_HEAVY: lambda a: ((0, 1), (a, 1)),
}


def _check_params(a: int, b: int, g: int) -> None:
    if a < 0 or b < 0:
        raise ValueError("degrees must be nonnegative")
    if g < 3:
        raise ValueError(f"girth must be at least 3, got {g}")


def wcycle_exists(p: Params) -> bool:
    """Whether some wcycle of weight ``g`` respects degree caps ``a`` and ``b``.

    Equivalent to existence of an (a,b,g)-wgraph.
    """
    a, b, g = p
    _check_params(a, b, g)
    if a >= 2:
        return True
    if a == 1 and b >= 2:
        return g >= 5
    if a == 1 and b == 1:
        return g >= 6 and g % 3 == 0
    if a == 0 and b >= 2:
        return g >= 6 and g % 2 == 0
    return False


@dataclass(frozen=True)
class MooreLevels:
    L: tuple[int, ...]
    H: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.L) + sum(self.H)


def levels(a: int, b: int, base: Base, depth: int) -> MooreLevels:
    """Level counts ``L[0..depth]``, ``H[0..depth]`` of the Moore-like wtree."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    (l0, h0), (l1, h1) = _BASES[base](a)
    L, H = [l0, l1], [h0, h1]
    for i in range(2, depth + 1):
        L.append((a - 1) * L[i - 1] + a * H[i - 1])
        H.append((b - 1) * H[i - 2] + b * L[i - 2])
    if min(L + H) < 0:
        raise ValueError(f"negative level count for a={a}, b={b}, base={base.value}")
    return MooreLevels(tuple(L), tuple(H))


def parity_plus(m: int, a: int, b: int) -> int:
    """Add one when ``m`` is odd and an odd degree forbids odd order."""
    return m + 1 if m % 2 == 1 and (a % 2 == 1 or b % 2 == 1) else m


def trivial_bound(a: int, b: int) -> int:
    """Closed-neighbourhood bound, raised by one when ``ab`` is odd."""
    return a + b + 2 if (a * b) % 2 == 1 else a + b + 1


@dataclass(frozen=True)
class BoundReport:
    params: Params
    m1: int | None
    m2: int | None
    m3: int | None
    m1_plus: int | None
    m2_plus: int | None
    m3_plus: int | None
    trivial: int
    moore: int | None
    even_max: int | None
    combined: int
    exists: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        d["params"] = {"a": self.params.a, "b": self.params.b, "g": self.params.g}
        return d


def moore_bounds(p: Params) -> BoundReport:
    """All lower bounds on n(a,b,g).

    For even girth both the light-rooted (m2) and heavy-rooted (m3) trees are
    valid whenever the root edge type exists, so the even-girth Moore bound is
    ``max(m2_plus, m3_plus)``; this covers the (1,2,10) case where m3 wins.
    A tree that needs a root edge of a type absent from the wgraph (``a = 0``
    for m2, ``b = 0`` for m3) is reported as ``None``.
    """
    a, b, g = p
    _check_params(a, b, g)
    m1 = m2 = m3 = None
    if g % 2 == 1:
        m1 = levels(a, b, Base.ODD, (g - 1) // 2).total
    else:
        depth = (g - 2) // 2
        if depth >= 1:
            if a >= 1:
                m2 = levels(a, b, Base.EVEN_LIGHT, depth).total
            if b >= 1:
                m3 = levels(a, b, Base.EVEN_HEAVY, depth).total
    plus = [None if m is None else parity_plus(m, a, b) for m in (m1, m2, m3)]
    if g % 2 == 1:
        moore = plus[0]
        even_max = None
    else:
        cands = [m for m in plus[1:] if m is not None]
        even_max = max(cands) if cands else None
        moore = even_max
    triv = trivial_bound(a, b)
    combined = max(triv, moore) if moore is not None else triv
    return BoundReport(
        params=Params(a, b, g),
        m1=m1, m2=m2, m3=m3,
        m1_plus=plus[0], m2_plus=plus[1], m3_plus=plus[2],
        trivial=triv,
        moore=moore,
        even_max=even_max,
        combined=combined,
        exists=wcycle_exists(p),
    )


def n0(a: int, b: int, g: int) -> int:
    """Moore-like bound n0(a,b,g); ``n0(r, 0, g)`` is the classical Moore bound."""
    rep = moore_bounds(Params(a, b, g))
    return rep.moore if rep.moore is not None else rep.trivial


def closed_form(g: int, a: int, b: int) -> int:
    """Polynomial closed forms of m1 (odd g <= 11) and m2 (even g <= 12)."""
    forms = {
        3: lambda: a + 1,
        5: lambda: a**2 + b + 1,
        7: lambda: a**3 - a**2 + 2*a*b + a + b + 1,
        9: lambda: a**4 - 2*a**3 + 3*a**2*b + 2*a**2 + b**2 + 1,
        11: lambda: (a**5 - 3*a**4 + 4*a**3*b + 4*a**3 - 3*a**2*b
                     + 3*a*b**2 - 2*a**2 + b**2 + a + 1),
        4: lambda: 2*a,
        6: lambda: 2*a**2 - 2*a + 2*b + 2,
        8: lambda: 2*a**3 - 4*a**2 + 4*a*b + 4*a,
        10: lambda: 2*a**4 - 6*a**3 + 6*a**2*b + 8*a**2 - 4*a*b + 2*b**2 - 4*a + 2,
        12: lambda: (2*a**5 - 8*a**4 + 8*a**3*b + 14*a**3 - 12*a**2*b
                     + 6*a*b**2 - 12*a**2 + 4*a*b + 6*a),
    }
    if g not in forms:
        raise ValueError(f"no closed form for g={g}")
    return forms[g]()


def special_exact_value(p: Params, catalog=None):
    """Exact n(a,b,g) for the closed cases, ``INF`` for nonexistence.

    Returns ``None`` when no closed case applies and ``"unknown"`` when the
    answer is an n(r,g) missing from the catalog.
    """
    a, b, g = p
    if not wcycle_exists(p):
        return INF
    if a == 1 and b == 1:
        return 2 * g // 3
    if b == 0:
        return _cage_order(a, g, catalog)
    if a == 0:
        return _cage_order(b, g // 2, catalog)
    return None


def _cage_order(r: int, g: int, catalog):
    if catalog is None:
        from . import catalog as catalog_mod
        catalog = catalog_mod.default_catalog()
    order = catalog.cage_order(r, g)
    return "unknown" if order is None else order


def excess(G: WGraph, p: Params) -> int:
    """Order of a verified (a,b,g)-wgraph minus the Moore-like bound."""
    if not verify_witness(G, p):
        raise ValueError(f"not a valid {p}-wgraph")
    return G.n - n0(p.a, p.b, p.g)
