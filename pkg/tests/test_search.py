import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wcages.bounds import levels, moore_bounds
from wcages.search import (
    BUDGET_EXCEEDED,
    PROVEN_NONE,
    SearchConfig,
    Status,
    exists_wgraph,
    find_regular_graph,
    find_wcage,
    moore_tree,
    naive_enumerate,
    search_order,
)
from wcages.wgraph import INF, Params, WGraph, is_regular, verify_witness, wgirth


def test_order_examples():
    G = exists_wgraph(Params(2, 2, 5), 7)
    assert isinstance(G, WGraph) and verify_witness(G, Params(2, 2, 5))
    assert exists_wgraph(Params(2, 2, 5), 6) is PROVEN_NONE
    assert exists_wgraph(Params(2, 2, 3), 5) is PROVEN_NONE


def test_parity_excludes_without_search():
    res = search_order(Params(3, 1, 5), 11)
    assert res.verdict is PROVEN_NONE and res.nodes == 0


def test_small_witnesses():
    G = exists_wgraph(Params(1, 2, 5), 4)
    assert G.n == 4 and len(G.light_edges) == 2
    G = exists_wgraph(Params(1, 1, 6), 4)
    assert wgirth(G) == 6


@pytest.mark.parametrize("p,n", [((1, 2, 5), 4), ((2, 1, 6), 8), ((1, 2, 8), 10), ((2, 2, 3), 6), ((3, 0, 5), 10)])
def test_find_wcage_values(p, n):
    out = find_wcage(Params(*p))
    assert out.status is Status.EXACT and out.value == n
    assert verify_witness(out.witness, Params(*p))
    lower = moore_bounds(Params(*p)).combined
    assert [m for m, _ in out.exhausted_orders] == [m for m in range(lower, n) if (p[0] * m) % 2 == 0
                                                     and (p[1] * m) % 2 == 0]


def test_nonexistent():
    out = find_wcage(Params(1, 1, 5))
    assert out.status is Status.NONEXISTENT and out.value == INF
    assert out.to_dict()["value"] == "inf"


def test_budget_exceeded_status():
    out = find_wcage(Params(2, 1, 9), SearchConfig(node_budget=500))
    assert out.status is Status.BUDGET_EXCEEDED
    assert out.stats["nodes"] <= 500
    assert exists_wgraph(Params(2, 1, 9), 24, SearchConfig(node_budget=10)) is BUDGET_EXCEEDED


def test_lower_only_when_max_order_reached():
    out = find_wcage(Params(2, 1, 7), SearchConfig(max_order=13))
    assert out.status is Status.LOWER_ONLY and out.value == 14
    assert out.exhausted_orders and out.exhausted_orders[-1][0] == 12


def test_json_is_stable_and_deterministic():
    a = find_wcage(Params(2, 1, 6)).to_json()
    b = find_wcage(Params(2, 1, 6)).to_json()
    assert a == b
    d = json.loads(a)
    assert set(d) == {"params", "status", "value", "witness_wgf", "exhausted_orders", "stats"}
    assert "wall_time" not in d["stats"]
    assert "wall_time" in find_wcage(Params(2, 1, 6), SearchConfig(deterministic=False)).stats


def test_workers_agree():
    one = find_wcage(Params(2, 1, 7), SearchConfig(worker_count=1)).to_json()
    two = find_wcage(Params(2, 1, 7), SearchConfig(worker_count=2)).to_json()
    assert one == two


@pytest.mark.parametrize("kw", [dict(canon_depth=2), dict(moore_tree=False), dict(prune_degree=False)])
def test_search_options_do_not_change_answers(kw):
    for p in [(1, 2, 5), (2, 1, 6), (2, 2, 5), (1, 1, 6)]:
        base = find_wcage(Params(*p))
        alt = find_wcage(Params(*p), SearchConfig(**kw))
        assert alt.status is base.status and alt.value == base.value


def test_moore_tree_matches_level_counts():
    for p in [(2, 2, 9), (1, 2, 10), (4, 1, 5), (2, 1, 8), (3, 0, 6)]:
        size, edges, base = moore_tree(*p)
        a, b, g = p
        assert size == levels(a, b, base, (g - 1) // 2 if g % 2 else (g - 2) // 2).total
        G = WGraph.from_edges(size, [(u, v) for u, v, w in edges if w == 1], [(u, v) for u, v, w in edges if w == 2])
        assert wgirth(G) == INF
        assert all(dl <= a and dh <= b for dl, dh in G.degrees())


def test_find_regular_graph():
    G = find_regular_graph(3, 5, 12)
    assert G.n == 10 and is_regular(G, 3) and wgirth(G) == 5
    assert find_regular_graph(3, 7, 20, budget=100_000) is None


def test_naive_enumeration_cap():
    with pytest.raises(ValueError):
        naive_enumerate(Params(2, 1, 5), 8)


@settings(max_examples=60)
@given(st.integers(0, 3), st.integers(0, 3), st.integers(3, 7), st.integers(1, 6))
def test_search_agrees_with_naive_oracle(a, b, g, n):
    p = Params(a, b, g)
    fast = exists_wgraph(p, n)
    slow = naive_enumerate(p, n)
    assert isinstance(fast, WGraph) == isinstance(slow, WGraph)
    if isinstance(fast, WGraph):
        assert verify_witness(fast, p) and verify_witness(slow, p)
