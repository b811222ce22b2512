import itertools
import math
import os

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from wcages.wgraph import HEAVY, LIGHT, WGraph

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], derandomize=True
)
settings.load_profile("default")

# criterion-level property suites run at least this many cases
PROPERTY_CASES = 1000

EXTENDED = os.environ.get("WCAGES_EXTENDED") == "1"
extended = pytest.mark.skipif(not EXTENDED, reason="set WCAGES_EXTENDED=1 for the large searches")


@st.composite
def wgraphs(draw, max_n=8, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    kinds = draw(st.lists(st.sampled_from((0, LIGHT, HEAVY)), min_size=len(pairs), max_size=len(pairs)))
    light = [e for e, k in zip(pairs, kinds) if k == LIGHT]
    heavy = [e for e, k in zip(pairs, kinds) if k == HEAVY]
    return WGraph.from_edges(n, light, heavy)


@st.composite
def permuted(draw, G):
    return draw(st.permutations(range(G.n)))


def dfs_girth(G: WGraph) -> float:
    """Minimum cycle weight by enumerating simple cycles from their smallest vertex."""
    adj = [dict() for _ in range(G.n)]
    for u, v, w in G.edges:
        adj[u][v] = w
        adj[v][u] = w
    best = math.inf

    def walk(start, x, seen, weight, length):
        nonlocal best
        for y, w in adj[x].items():
            if weight + w >= best:
                continue
            if y == start and length >= 3:
                best = weight + w
            elif y > start and y not in seen:
                seen.add(y)
                walk(start, y, seen, weight + w, length + 1)
                seen.discard(y)

    for s in range(G.n):
        walk(s, s, {s}, 0, 1)
    return best


def nx_girth(G: WGraph) -> float:
    """Minimum over edges uv of w(uv) plus the shortest u-v path avoiding uv."""
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    for u, v, w in G.edges:
        H.add_edge(u, v, weight=w)
    best = math.inf
    for u, v, w in G.edges:
        H.remove_edge(u, v)
        try:
            best = min(best, w + nx.dijkstra_path_length(H, u, v))
        except nx.NetworkXNoPath:
            pass
        H.add_edge(u, v, weight=w)
    return best


def plain_cycle(n):
    return [(i, (i + 1) % n) if i < (i + 1) % n else ((i + 1) % n, i) for i in range(n)]


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "REPORT", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
