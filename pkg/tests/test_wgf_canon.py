import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wcages import wgf
from wcages.canon import canonical_certificate, canonical_form, canonical_labeling
from wcages.catalog import petersen
from wcages.wgraph import WGraph

from conftest import PROPERTY_CASES, wgraphs


def test_dumps_format():
    G = WGraph.from_edges(3, light=[(1, 2)], heavy=[(0, 1)])
    assert wgf.dumps(G) == "wgf 1\nn 3\ne 1 2 1\ne 0 1 2\n"


@pytest.mark.parametrize("text,line", [
    ("", 1),
    ("wgf 2\nn 3\n", 1),
    ("wgf 1\n", 2),
    ("wgf 1\nn x\n", 2),
    ("wgf 1\nn 3\ne 0 1\n", 3),
    ("wgf 1\nn 3\ne 0 3 1\n", 3),
    ("wgf 1\nn 3\ne 1 0 1\n", 3),
    ("wgf 1\nn 3\ne 0 1 3\n", 3),
    ("wgf 1\nn 3\ne 0 2 1\ne 0 1 1\n", 4),
    ("wgf 1\nn 3\ne 0 1 1\ne 0 1 1\n", 4),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(wgf.WGFError) as exc:
        wgf.loads(text)
    assert exc.value.lineno == line


def test_read_rejects_crlf(tmp_path):
    p = tmp_path / "g.wgf"
    p.write_bytes(b"wgf 1\r\nn 1\r\n")
    with pytest.raises(wgf.WGFError):
        wgf.read(p)


def test_file_round_trip(tmp_path):
    G = WGraph.plain(10, petersen())
    wgf.write(G, tmp_path / "p.wgf")
    assert wgf.read(tmp_path / "p.wgf") == G


@settings(max_examples=PROPERTY_CASES)
@given(wgraphs(max_n=9))
def test_wgf_round_trip(G):
    text = wgf.dumps(G)
    H = wgf.loads(text)
    assert H == G
    assert wgf.dumps(H) == text


def test_triangle_weights_distinguish_certificates():
    tri = [(0, 1), (1, 2), (0, 2)]
    assert canonical_certificate(WGraph.from_edges(3, tri)) != canonical_certificate(WGraph.from_edges(3, heavy=tri))


def test_two_vertex_certificates_distinct():
    graphs = [WGraph(2), WGraph.from_edges(2, [(0, 1)]), WGraph.from_edges(2, heavy=[(0, 1)])]
    assert len({canonical_certificate(G) for G in graphs}) == 3


def test_petersen_relabel_certificate():
    G = WGraph.plain(10, petersen())
    perm = [3, 7, 1, 9, 0, 5, 2, 8, 6, 4]
    assert canonical_certificate(G.relabel(perm)) == canonical_certificate(G)


@settings(max_examples=PROPERTY_CASES)
@given(wgraphs(max_n=8, min_n=1), st.data())
def test_certificate_invariant_under_relabel(G, data):
    perm = data.draw(st.permutations(range(G.n)))
    assert canonical_certificate(G.relabel(perm)) == canonical_certificate(G)


@settings(max_examples=300)
@given(wgraphs(max_n=7))
def test_canonical_form_is_isomorphic_and_idempotent(G):
    cert, perm = canonical_labeling(G)
    C = canonical_form(G)
    assert sorted(perm) == list(range(G.n))
    assert canonical_certificate(C) == cert
    assert canonical_form(C) == C


def _isomorphic(G, H):
    if G.n != H.n or G.num_edges() != H.num_edges():
        return False
    return any(G.relabel(list(p)) == H for p in itertools.permutations(range(G.n)))


@settings(max_examples=300)
@given(st.integers(0, 5).flatmap(lambda n: st.tuples(wgraphs(max_n=n, min_n=n), wgraphs(max_n=n, min_n=n))))
def test_certificate_equality_matches_brute_force_isomorphism(pair):
    G, H = pair
    assert (canonical_certificate(G) == canonical_certificate(H)) == _isomorphic(G, H)
