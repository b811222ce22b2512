"""Known (r,g)-cages.

Small families (complete graphs, cycles, complete bipartite graphs and the
incidence graphs of prime-order projective planes) are generated on demand.
The sporadic cages are shipped as WGF files under ``data/cages`` together
with an index recording their name, a SHA-256 digest of the canonical
certificate and, where known, a Hamiltonian cycle.  Each file is re-checked
for regularity and girth when loaded.  Minimality is taken from the
literature and never re-verified.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

from . import wgf
from .canon import canonical_certificate
from .wgraph import INF, WGraph, is_regular, wgirth


@dataclass(frozen=True)
class CageRecord:
    r: int
    g: int
    order: int
    edges: tuple[tuple[int, int], ...]
    name: str
    hamiltonian_cycle: tuple[int, ...] | None = None
    notes: str = ""

    @property
    def graph(self) -> WGraph:
        return WGraph.plain(self.order, self.edges)


class CatalogError(ValueError):
    pass


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def complete_graph(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> list[tuple[int, int]]:
    return [(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)]


def complete_bipartite(m: int) -> list[tuple[int, int]]:
    return [(x, m + y) for x in range(m) for y in range(m)]


def lcf_graph(n: int, shifts: list[int], repeats: int) -> list[tuple[int, int]]:
    edges = set(cycle_graph(n))
    seq = shifts * repeats
    for i in range(n):
        j = (i + seq[i % len(seq)]) % n
        edges.add((min(i, j), max(i, j)))
    return sorted(edges)


def petersen() -> list[tuple[int, int]]:
    """Kneser graph K(5,2)."""
    pairs = list(itertools.combinations(range(5), 2))
    return [(i, j) for i, j in itertools.combinations(range(10), 2)
            if not set(pairs[i]) & set(pairs[j])]


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q**0.5) + 1))


def projective_plane_incidence(q: int) -> list[tuple[int, int]]:
    """Point-line incidence graph of PG(2,q), q prime: a Moore (q+1,6)-cage."""
    if not _is_prime(q):
        raise ValueError("only prime q supported")
    pts = []
    for v in itertools.product(range(q), repeat=3):
        # normalise: first nonzero coordinate is 1
        nz = next((c for c in v if c), 0)
        if nz == 1:
            pts.append(v)
    m = len(pts)
    return [(i, m + j) for i, p in enumerate(pts) for j, l in enumerate(pts)
            if sum(x * y for x, y in zip(p, l)) % q == 0]


def tutte_coxeter() -> list[tuple[int, int]]:
    """Incidence graph of the symplectic quadrangle W(2) (points and totally isotropic lines of PG(3,2))."""
    pts = [v for v in itertools.product(range(2), repeat=4) if any(v)]

    def form(x, y):
        return (x[0] * y[1] + x[1] * y[0] + x[2] * y[3] + x[3] * y[2]) % 2

    lines = set()
    for x, y in itertools.combinations(pts, 2):
        if form(x, y) == 0:
            z = tuple((s + t) % 2 for s, t in zip(x, y))
            lines.add(frozenset((x, y, z)))
    lines = sorted(tuple(sorted(L)) for L in lines)
    idx = {p: i for i, p in enumerate(pts)}
    return sorted((idx[p], 15 + j) for j, L in enumerate(lines) for p in L)


def hoffman_singleton() -> list[tuple[int, int]]:
    """Robertson's pentagons P_h (vertices 5h+j) and pentagrams Q_i (25+5i+j)."""
    edges = set()
    for h in range(5):
        for j in range(5):
            for a, b in ((5 * h + j, 5 * h + (j + 1) % 5),
                         (25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5)):
                edges.add((min(a, b), max(a, b)))
            for i in range(5):
                edges.add((5 * h + j, 25 + 5 * i + (h * i + j) % 5))
    return sorted(edges)


def benson() -> list[tuple[int, int]]:
    """Incidence graph of the split Cayley hexagon H(2) on the quadric Q(6,2)."""
    def quad(x):
        return (x[0] * x[4] + x[1] * x[5] + x[2] * x[6] + x[3]) % 2

    pts = [v for v in itertools.product(range(2), repeat=7) if any(v) and quad(v) == 0]
    conds = [((3, 4), (1, 2)), ((3, 5), (0, 2)), ((3, 6), (0, 1)),
             ((3, 0), (5, 6)), ((3, 1), (4, 6)), ((3, 2), (4, 5))]
    lines = set()
    for x, y in itertools.combinations(pts, 2):
        z = tuple((s + t) % 2 for s, t in zip(x, y))
        if quad(z):
            continue

        def pl(i, j):
            return (x[i] * y[j] + x[j] * y[i]) % 2

        if all(pl(*c) == pl(*d) for c, d in conds):
            lines.add(tuple(sorted((x, y, z))))
    lines = sorted(lines)
    idx = {p: i for i, p in enumerate(pts)}
    return sorted((idx[p], 63 + j) for j, L in enumerate(lines) for p in L)


# name -> (r, g, generator)
SPORADIC = {
    "petersen": (3, 5, petersen),
    "heawood": (3, 6, lambda: projective_plane_incidence(2)),
    "mcgee": (3, 7, lambda: lcf_graph(24, [12, 7, -7], 8)),
    "tutte_coxeter": (3, 8, tutte_coxeter),
    "robertson": (4, 5, None),  # found by search, see build_embedded
    "hoffman_singleton": (7, 5, hoffman_singleton),
    "benson": (3, 12, benson),
}

DATA_DIR = "data/cages"


def cage_filename(r: int, g: int) -> str:
    return f"cage_r{r}_g{g}.wgf"


def certificate_digest(G: WGraph) -> str:
    return hashlib.sha256(canonical_certificate(G)).hexdigest()


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

@dataclass
class Catalog:
    """Read-only view of the known cages."""

    sporadic: dict[tuple[int, int], CageRecord] = field(default_factory=dict)

    @classmethod
    def load(cls, directory: str | Path | None = None, verify: bool = True) -> "Catalog":
        if directory is None:
            base = resources.files("wcages").joinpath(DATA_DIR)
        else:
            base = Path(directory)
        index = json.loads(base.joinpath("index.json").read_text())
        sporadic = {}
        for entry in index:
            G = wgf.read(base.joinpath(entry["file"]))
            rec = CageRecord(
                r=entry["r"], g=entry["g"], order=G.n,
                edges=tuple(G.light_edges), name=entry["name"],
                hamiltonian_cycle=tuple(entry["hamiltonian_cycle"]) if entry.get("hamiltonian_cycle") else None,
                notes=entry.get("notes", ""),
            )
            if verify:
                check_record(rec)
            sporadic[(rec.r, rec.g)] = rec
        return cls(sporadic)

    def get_cage(self, r: int, g: int) -> CageRecord | None:
        if (r, g) in self.sporadic:
            return self.sporadic[(r, g)]
        return family_cage(r, g)

    def cage_order(self, r: int, g: int) -> int | None:
        """n(r,g) when known; ``INF`` when no (r,g)-cage exists."""
        if r < 2 or g < 3:
            return INF
        rec = self.get_cage(r, g)
        return rec.order if rec else None

    def tilde_n(self, r: int, g: int):
        """Order of the smallest r-regular graph of girth at least g, or ``None`` if unknown."""
        if r < 0 or g < 2:
            raise ValueError("need r >= 0 and g >= 2")
        if r <= 1 or g == 2:
            return r + 1
        return self.cage_order(r, g)

    def regular_graph(self, r: int, g: int) -> WGraph | None:
        """A smallest r-regular plain graph of girth at least ``g`` from the catalog."""
        if r <= 1 or g <= 2:
            return WGraph.plain(r + 1, complete_graph(r + 1))
        rec = self.get_cage(r, g)
        return rec.graph if rec else None

    def records(self) -> list[CageRecord]:
        return sorted(self.sporadic.values(), key=lambda c: (c.r, c.g))


def family_cage(r: int, g: int) -> CageRecord | None:
    if r < 2 or g < 3:
        return None
    if g == 3:
        n = r + 1
        return CageRecord(r, 3, n, tuple(complete_graph(n)), f"K{n}", tuple(range(n)) if n >= 3 else None,
                          "complete graph")
    if g == 4:
        ham = tuple(v for i in range(r) for v in (i, r + i))
        return CageRecord(r, 4, 2 * r, tuple(complete_bipartite(r)), f"K{r},{r}", ham,
                          "complete bipartite graph")
    if r == 2:
        return CageRecord(2, g, g, tuple(cycle_graph(g)), f"C{g}", tuple(range(g)), "cycle")
    if g == 6 and _is_prime(r - 1) and r > 3:
        q = r - 1
        edges = projective_plane_incidence(q)
        return CageRecord(r, 6, 2 * (q * q + q + 1), tuple(edges), f"PG(2,{q}) incidence",
                          None, "Moore cage: incidence graph of a projective plane")
    return None


def check_record(rec: CageRecord) -> None:
    G = rec.graph
    if G.n != rec.order:
        raise CatalogError(f"{rec.name}: order {G.n} != {rec.order}")
    if not is_regular(G, rec.r):
        raise CatalogError(f"{rec.name}: not {rec.r}-regular")
    gg = wgirth(G)
    if gg != rec.g:
        raise CatalogError(f"{rec.name}: girth {gg} != {rec.g}")
    if rec.hamiltonian_cycle is not None and not is_hamiltonian_cycle(G, rec.hamiltonian_cycle):
        raise CatalogError(f"{rec.name}: stored Hamiltonian cycle is invalid")


def is_hamiltonian_cycle(G: WGraph, cycle) -> bool:
    cyc = list(cycle)
    if sorted(cyc) != list(range(G.n)) or G.n < 3:
        return False
    light, heavy = G.adjacency()
    return all(cyc[(i + 1) % G.n] in light[cyc[i]] or cyc[(i + 1) % G.n] in heavy[cyc[i]]
               for i in range(G.n))


@lru_cache(maxsize=None)
def default_catalog() -> Catalog:
    return Catalog.load()


def generate_sporadic(name: str) -> WGraph:
    r, g, gen = SPORADIC[name]
    if gen is None:
        return _robertson()
    edges = gen()
    return WGraph.plain(1 + max(max(e) for e in edges), edges)


def _robertson() -> WGraph:
    # the unique (4,5)-cage; recovered by exhaustive search for a 4-regular
    # girth-5 graph on 19 vertices
    from .search import SearchConfig, exists_wgraph
    from .wgraph import Params

    res = exists_wgraph(Params(4, 0, 5), 19, SearchConfig())
    if not isinstance(res, WGraph):
        raise CatalogError("search did not recover the (4,5)-cage")
    return res


def build_embedded(directory: str | Path, ham_budget: int = 2_000_000) -> list[dict]:
    """Regenerate the shipped cage files and index under ``directory``."""
    from .constructions.splitting import hamiltonian_cycle

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    index = []
    for name, (r, g, _) in SPORADIC.items():
        G = generate_sporadic(name)
        ham = hamiltonian_cycle(G, budget=ham_budget) if name != "petersen" else None
        path = directory / cage_filename(r, g)
        wgf.write(G, path)
        entry = {
            "name": name, "r": r, "g": g, "order": G.n, "file": path.name,
            "certificate_sha256": certificate_digest(G),
            "hamiltonian_cycle": list(ham) if ham else None,
            "notes": "minimality assumed from the cage literature",
        }
        index.append(entry)
    (directory / "index.json").write_text(json.dumps(index, indent=1, sort_keys=True) + "\n")
    return index
