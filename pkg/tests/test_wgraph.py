import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wcages.catalog import petersen
from wcages.wgraph import (
    HEAVY,
    INF,
    LIGHT,
    Params,
    WGraph,
    complement,
    is_biregular,
    is_regular,
    pair_index,
    verify_witness,
    wdistance,
    wgirth,
)

from conftest import PROPERTY_CASES, dfs_girth, nx_girth, plain_cycle, wgraphs


def test_heavy_triangle_girth_6():
    G = WGraph.from_edges(3, heavy=[(0, 1), (1, 2), (0, 2)])
    assert wgirth(G) == 6


def test_alternating_four_cycle_girth_6():
    G = WGraph.from_edges(4, light=[(0, 1), (2, 3)], heavy=[(1, 2), (0, 3)])
    assert wgirth(G) == 6


def test_petersen_girth_5():
    assert wgirth(WGraph.plain(10, petersen())) == 5


def test_one_light_two_heavy_triangle():
    G0 = WGraph.from_edges(3, light=[(0, 1)], heavy=[(1, 2), (0, 2)])
    assert wgirth(G0) == 5
    assert wdistance(G0, 0, 1) == 1
    assert wdistance(G0, 1, 2) == 2


def test_distance_edge_cases():
    G = WGraph.from_edges(3, heavy=[(0, 1)])
    assert wdistance(G, 2, 2) == 0
    assert wdistance(G, 0, 1) == 2
    assert wdistance(G, 0, 2) == INF
    with pytest.raises(IndexError):
        wdistance(G, 0, 3)


def test_acyclic_girth_is_inf():
    assert wgirth(WGraph(0)) == INF
    assert wgirth(WGraph.plain(4, [(0, 1), (1, 2), (2, 3)])) == INF


def test_biregular_examples():
    two_triangles = WGraph.from_edges(6, plain_cycle(3) + [(3, 4), (4, 5), (3, 5)], [(0, 3), (1, 4), (2, 5)])
    assert is_biregular(two_triangles, 2, 1)
    assert is_biregular(WGraph(0), 5, 7)
    assert not is_biregular(WGraph.plain(4, plain_cycle(4)), 2, 1)


def test_verify_witness_k4():
    k4 = WGraph.plain(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert verify_witness(k4, Params(3, 0, 3))
    assert not verify_witness(k4, Params(3, 0, 4))


def test_construction_rejects_bad_input():
    with pytest.raises(ValueError):
        WGraph.from_edges(3, light=[(0, 0)])
    with pytest.raises(ValueError):
        WGraph.from_edges(3, light=[(0, 1)], heavy=[(1, 0)])
    with pytest.raises(ValueError):
        WGraph.from_edges(3, light=[(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        WGraph.from_edges(3, light=[(0, 3)])


def test_pair_index_is_row_major():
    n = 6
    idx = [pair_index(n, u, v) for u in range(n) for v in range(u + 1, n)]
    assert idx == list(range(n * (n - 1) // 2))
    assert pair_index(n, 4, 1) == pair_index(n, 1, 4)


def test_large_graph_round_trip_of_edges():
    n = 300
    light = [(i, (i + 1) % n) if i < n - 1 else (0, n - 1) for i in range(n)]
    G = WGraph.from_edges(n, light)
    assert sorted(G.light_edges) == sorted(light)
    assert is_regular(G, 2)
    assert wgirth(G) == n


def test_complement_of_cycle():
    C = complement(WGraph.plain(5, plain_cycle(5)))
    assert is_regular(C, 2) and wgirth(C) == 5


@settings(max_examples=PROPERTY_CASES)
@given(wgraphs(max_n=8))
def test_girth_matches_cycle_enumeration(G):
    assert wgirth(G) == dfs_girth(G)


@settings(max_examples=PROPERTY_CASES)
@given(wgraphs(max_n=8))
def test_girth_matches_networkx_edge_deletion(G):
    assert wgirth(G) == nx_girth(G)


@settings(max_examples=300)
@given(wgraphs(max_n=8, min_n=1), st.data())
def test_girth_and_degrees_invariant_under_relabel(G, data):
    perm = data.draw(st.permutations(range(G.n)))
    H = G.relabel(perm)
    assert wgirth(H) == wgirth(G)
    assert sorted(H.degrees()) == sorted(G.degrees())


@settings(max_examples=300)
@given(wgraphs(max_n=7, min_n=2), st.data())
def test_distance_is_symmetric_and_bounded_by_edges(G, data):
    u = data.draw(st.integers(0, G.n - 1))
    v = data.draw(st.integers(0, G.n - 1))
    d = wdistance(G, u, v)
    assert d == wdistance(G, v, u)
    w = G.weight(u, v)
    if w:
        assert d <= w
    if d not in (0, math.inf):
        assert d >= 1


@settings(max_examples=300)
@given(wgraphs(max_n=8))
def test_edges_sorted_and_weights_consistent(G):
    es = G.edges
    assert es == sorted(es, key=lambda e: (e[2], e[0], e[1]))
    for u, v, w in es:
        assert G.weight(u, v) == w and w in (LIGHT, HEAVY)
