import json
import shutil
from importlib import resources

import pytest

from wcages import wgf
from wcages.catalog import (
    SPORADIC,
    Catalog,
    CatalogError,
    certificate_digest,
    default_catalog,
    family_cage,
    generate_sporadic,
    is_hamiltonian_cycle,
)
from wcages.constructions import (
    find_factor,
    hamiltonian_cycle,
    hamiltonian_moore_bound,
    split_cage,
)
from wcages.constructions.splitting import FactorStats
from wcages.wgraph import HEAVY, INF, WGraph, is_regular, wgirth


@pytest.fixture(scope="module")
def cat():
    return default_catalog()


@pytest.mark.parametrize("r,g,order,name", [
    (3, 5, 10, "petersen"), (3, 6, 14, "heawood"), (3, 7, 24, "mcgee"), (3, 8, 30, "tutte_coxeter"),
    (3, 12, 126, "benson"), (4, 5, 19, "robertson"), (7, 5, 50, "hoffman_singleton"),
])
def test_sporadic_cages(cat, r, g, order, name):
    rec = cat.get_cage(r, g)
    assert rec.name == name and rec.order == order
    G = rec.graph
    assert is_regular(G, r) and wgirth(G) == g


def test_family_cages(cat):
    assert cat.get_cage(4, 3).order == 5
    assert cat.get_cage(5, 4).order == 10
    assert cat.get_cage(2, 9).order == 9
    assert cat.get_cage(4, 6).order == 26
    assert family_cage(5, 7) is None
    assert cat.cage_order(1, 5) == INF
    assert cat.tilde_n(1, 5) == 2 and cat.tilde_n(0, 9) == 1
    assert cat.tilde_n(5, 7) is None


def test_regenerated_cages_match_stored_certificates():
    index = json.loads(resources.files("wcages").joinpath("data/cages/index.json").read_text())
    assert {e["name"] for e in index} == set(SPORADIC)
    for e in index:
        G = generate_sporadic(e["name"])
        assert certificate_digest(G) == e["certificate_sha256"], e["name"]
        stored = wgf.read(resources.files("wcages").joinpath("data/cages/" + e["file"]))
        assert certificate_digest(stored) == e["certificate_sha256"]


def test_stored_hamiltonian_cycles(cat):
    for rec in cat.records():
        if rec.hamiltonian_cycle is not None:
            assert is_hamiltonian_cycle(rec.graph, rec.hamiltonian_cycle)
    assert cat.get_cage(3, 5).hamiltonian_cycle is None


def test_corrupt_catalog_is_rejected(tmp_path):
    src = resources.files("wcages").joinpath("data/cages")
    for name in ("index.json", "cage_r3_g5.wgf"):
        shutil.copy(src.joinpath(name), tmp_path / name)
    index = [e for e in json.loads((tmp_path / "index.json").read_text()) if e["name"] == "petersen"]
    (tmp_path / "index.json").write_text(json.dumps(index))
    assert Catalog.load(tmp_path).get_cage(3, 5).order == 10
    G = wgf.read(tmp_path / "cage_r3_g5.wgf")
    broken = WGraph.plain(10, G.light_edges[1:])
    wgf.write(broken, tmp_path / "cage_r3_g5.wgf")
    with pytest.raises(CatalogError):
        Catalog.load(tmp_path)


def _edges(cyc):
    return {tuple(sorted((cyc[i], cyc[(i + 1) % len(cyc)]))) for i in range(len(cyc))}


def test_petersen_matching_split(cat):
    X = cat.get_cage(3, 5)
    F = find_factor(X.graph, 1)
    res = split_cage(X, F)
    assert (res.a, res.b, res.girth, res.graph.n) == (1, 2, 8, 10)


def test_heawood_hamiltonian_split(cat):
    X = cat.get_cage(3, 6)
    cyc = hamiltonian_cycle(X.graph)
    assert cyc is not None
    res = split_cage(X, _edges(cyc))
    assert (res.a, res.b, res.girth, res.graph.n) == (2, 1, 7, 14)


def test_petersen_has_no_hamiltonian_cycle(cat):
    stats = FactorStats()
    assert hamiltonian_cycle(cat.get_cage(3, 5).graph, stats=stats) is None
    assert stats.exhausted


def test_odd_order_has_no_perfect_matching():
    stats = FactorStats()
    assert find_factor(WGraph.plain(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]), 1, stats=stats) is None
    assert stats.exhausted


def test_factor_min_girth(cat):
    X = cat.get_cage(3, 6).graph
    F = find_factor(X, 2, min_girth=14)
    assert F is not None
    assert wgirth(WGraph.plain(14, sorted(F))) == 14


def test_factor_budget_reports_not_exhausted(cat):
    stats = FactorStats()
    X = cat.get_cage(3, 8).graph
    assert find_factor(X, 1, split_girth=13, budget=5, stats=stats) is None
    assert not stats.exhausted


def test_heavy_factor_split(cat):
    X = cat.get_cage(7, 5)
    F = find_factor(X.graph, 2, 5, split_girth=6, factor_weight=HEAVY)
    res = split_cage(X, F, factor_weight=HEAVY)
    assert (res.a, res.b, res.girth, res.graph.n) == (5, 2, 6, 50)


def test_split_rejects_non_factor(cat):
    X = cat.get_cage(3, 5)
    assert (0, 1) not in X.graph.light_edges and (0, 7) in X.graph.light_edges
    with pytest.raises(ValueError, match="subgraph"):
        split_cage(X, [(0, 1)])
    with pytest.raises(ValueError, match="irregular"):
        split_cage(X, [(0, 7)])


def test_hamiltonian_moore_bound_heawood(cat):
    hb = hamiltonian_moore_bound(3, 6, cat)
    assert hb.bound == 14 and hb.window == (7, 8) and hb.girth == 7


def test_hamiltonian_moore_bound_needs_moore_cage(cat):
    with pytest.raises(ValueError):
        hamiltonian_moore_bound(3, 7, cat)
    with pytest.raises(ValueError):
        hamiltonian_moore_bound(3, 5, cat)


def test_hamiltonian_moore_bound_tutte_coxeter(cat):
    hb = hamiltonian_moore_bound(3, 8, cat)
    assert hb.bound == 30 and hb.window == (9, 11) and hb.window[0] <= hb.girth <= hb.window[1]


def test_tutte_coxeter_hamiltonian_split_window(cat):
    X = cat.get_cage(3, 8)
    res = split_cage(X, _edges(X.hamiltonian_cycle))
    assert res.graph.n == 30 and 9 <= res.girth <= 11
