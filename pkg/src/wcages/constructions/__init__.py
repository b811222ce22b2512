"""Explicit (a,b,g)-wgraph constructions."""

from __future__ import annotations

import json
from dataclasses import dataclass

from ..wgraph import Params, WGraph, verify_witness
from .extension import (
    BoundWitness,
    SemidirectWitness,
    UnsupportedParameters,
    build_thm_construction,
    defect,
    extend,
    minimal_wcycle,
    regular_graph,
    upper_bound_builders,
)
from .factorizations import (
    Factorization,
    Host,
    one_factorization,
    one_factorization_bipartite,
    two_factorization,
)
from .girth34 import (
    NONEXISTENT,
    a_regular_girth4,
    block_girth4,
    construct_g3,
    construct_g4,
    g4_case,
    leqab2,
    n_g3,
    n_g4,
    triangle_forced,
)
from .girth56 import construct_g56, g56_case, n_g56
from .splitting import (
    FactorStats,
    HamiltonianMooreBound,
    SplitResult,
    find_factor,
    hamiltonian_cycle,
    hamiltonian_moore_bound,
    split_cage,
)

METHODS = ("auto", "g3", "g4", "g56", "thm34", "bounds", "split")


@dataclass(frozen=True)
class Provenance:
    builder: str
    case: str
    a: int
    b: int
    g: int
    order: int

    def to_json(self) -> str:
        return json.dumps(self.__dict__, sort_keys=True)


def construct(p: Params, method: str = "auto", catalog=None) -> tuple[WGraph, Provenance]:
    """Build a verified (a,b,g)-wgraph with the chosen method.

    ``auto`` prefers the optimal families (girth 3, 4, 5/6), then the
    smallest general upper-bound witness, then the generic construction.
    Raises ``ValueError`` when no witness exists or none can be built.
    """
    a, b, g = p
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method == "split":
        raise ValueError("use the split command / split_cage for cage splitting")
    out: tuple[WGraph, str, str] | None = None
    if method in ("auto", "g3") and g == 3 and a >= 2:
        out = construct_g3(a, b), "g3", str(_g3_case(a, b))
    elif method in ("auto", "g4") and g == 4 and a >= 2:
        out = construct_g4(a, b), "g4", str(g4_case(a, b))
    elif method in ("auto", "g56") and g56_case(a, b, g) is not None:
        out = construct_g56(a, b, g), "g56", str(g56_case(a, b, g))
    elif method in ("g3", "g4", "g56"):
        raise ValueError(f"{p} is outside the {method} family")
    if out is None and method in ("auto", "bounds"):
        cands = upper_bound_builders(p, catalog)
        if cands:
            best = min(cands, key=lambda bw: (bw.graph.n, bw.case))
            out = best.graph, "bounds", best.case
        elif method == "bounds":
            raise ValueError(f"no general upper-bound case applies to {p}")
    if out is None:
        out = build_thm_construction(p, catalog), "thm34", "wcycle"
    G, builder, case = out
    if not verify_witness(G, p):
        raise AssertionError(f"{builder} produced an invalid witness for {p}")
    return G, Provenance(builder, case, a, b, g, G.n)


def _g3_case(a: int, b: int) -> int:
    if a < 2:
        return 1
    if a == 2:
        return 2 if b in (1, 2) else 3
    return 5 if (a * b) % 2 else 4


__all__ = [
    "BoundWitness", "Factorization", "FactorStats", "HamiltonianMooreBound", "Host", "METHODS",
    "NONEXISTENT", "Provenance", "SemidirectWitness", "SplitResult", "UnsupportedParameters",
    "a_regular_girth4", "block_girth4", "build_thm_construction", "construct", "construct_g3",
    "construct_g4", "construct_g56", "defect", "extend", "find_factor", "g4_case", "g56_case",
    "hamiltonian_cycle", "hamiltonian_moore_bound", "leqab2", "minimal_wcycle", "n_g3", "n_g4",
    "n_g56", "one_factorization", "one_factorization_bipartite", "regular_graph", "split_cage",
    "triangle_forced", "two_factorization", "upper_bound_builders",
]
