import json

import pytest

from wcages import wgf
from wcages.bounds import moore_bounds
from wcages.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_IO, EXIT_OK, main
from wcages.constructions import construct
from wcages.results import RStatus, results_load
from wcages.search import find_wcage
from wcages.wgraph import Params, verify_witness


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


@pytest.mark.parametrize("p", [(4, 1, 5), (1, 2, 10), (0, 1, 6), (2, 1, 13)])
def test_bound_pairs_with_library(capsys, p):
    code, d = run_json(capsys, "bound", *map(str, p))
    lib = moore_bounds(Params(*p)).to_dict()
    assert code == EXIT_OK and d == json.loads(json.dumps(lib))


def test_bound_text(capsys):
    code, out, _ = run(capsys, "bound", "4", "1", "5")
    assert "combined 18" in out
    assert "nonexistent" in run(capsys, "bound", "0", "1", "6")[1]
    assert "combined 16" in run(capsys, "bound", "1", "2", "10")[1]


def test_exists(capsys):
    assert run_json(capsys, "exists", "1", "2", "4")[1]["exists"] is False
    code, d = run_json(capsys, "exists", "2", "2", "5", "--order", "7")
    assert code == EXIT_OK and d["verdict"] == "FOUND"
    assert run_json(capsys, "exists", "2", "2", "5", "--order", "6")[1]["verdict"] == "NONE"
    code, d = run_json(capsys, "exists", "2", "1", "9", "--order", "24", "--budget", "10")
    assert code == EXIT_BUDGET and d["verdict"] == "BUDGET_EXCEEDED"


@pytest.mark.parametrize("p,status,value", [((2, 2, 5), "EXACT", 7), ((1, 1, 5), "NONEXISTENT", "inf")])
def test_search_pairs_with_library(capsys, p, status, value):
    code, d = run_json(capsys, "search", *map(str, p))
    assert code == EXIT_OK and d["status"] == status and d["value"] == value
    assert d == json.loads(find_wcage(Params(*p)).to_json())


def test_search_budget_flag_accepts_float_notation(capsys, tmp_path):
    out = tmp_path / "w.wgf"
    code, text, _ = run(capsys, "search", "1", "2", "9", "--budget", "1e8", "--out", str(out))
    assert code == EXIT_OK and "EXACT 14" in text
    assert verify_witness(wgf.read(out), Params(1, 2, 9))


def test_search_budget_exceeded_exit_code_and_db(capsys, tmp_path, monkeypatch):
    db = tmp_path / "r.jsonl"
    monkeypatch.setenv("WCAGE_DB", str(db))
    code, _, _ = run(capsys, "search", "2", "1", "9", "--budget", "1000")
    assert code == EXIT_BUDGET
    r = results_load(db).get(2, 1, 9)
    assert r.status is RStatus.BRACKETED and r.upper == float("inf")
    assert run(capsys, "search", "1", "2", "7")[0] == EXIT_OK
    assert results_load(db).get(1, 2, 7).status is RStatus.EXACT


def test_construct_pairs_with_library(capsys, tmp_path):
    out = tmp_path / "g.wgf"
    code, d = run_json(capsys, "construct", "2", "5", "6", "--out", str(out))
    G, prov = construct(Params(2, 5, 6))
    assert code == EXIT_OK and d["order"] == 16 == G.n
    assert d["witness_wgf"] == wgf.dumps(G) == out.read_text()
    assert json.loads((tmp_path / "g.provenance.json").read_text()) == json.loads(prov.to_json())


def test_construct_examples(capsys):
    assert "order 6" in run(capsys, "construct", "3", "2", "4")[1]
    code, d = run_json(capsys, "construct", "1", "2", "5", "--method", "thm34")
    assert code == EXIT_OK and d["order"] == 30
    assert run(capsys, "construct", "1", "1", "5")[0] == EXIT_FAIL


def test_verify_split_file(capsys, tmp_path):
    out = tmp_path / "pet.wgf"
    assert run(capsys, "split", "3", "5", "--factor", "1", "--out", str(out))[0] == EXIT_OK
    code, text, _ = run(capsys, "verify", str(out), "1", "2", "8")
    assert code == EXIT_OK and text.startswith("OK")
    code, text, _ = run(capsys, "verify", str(out), "1", "2", "7")
    assert code == EXIT_FAIL and "girth=8" in text
    code, d = run_json(capsys, "verify", str(out), "2", "1", "8")
    assert code == EXIT_FAIL and any(r.startswith("degree") for r in d["reasons"])


def test_verify_parse_and_io_errors(capsys, tmp_path):
    bad = tmp_path / "bad.wgf"
    bad.write_text("wgf 1\nn 3\ne 0 5 1\n")
    assert run(capsys, "verify", str(bad), "1", "1", "6")[0] == EXIT_IO
    assert run(capsys, "verify", str(tmp_path / "missing.wgf"), "1", "1", "6")[0] == EXIT_IO


def test_usage_errors_exit_3(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bound", "1"])
    assert exc.value.code == EXIT_IO
    with pytest.raises(SystemExit) as exc:
        main(["search", "1", "2", "5", "--budget", "lots"])
    assert exc.value.code == EXIT_IO
    assert main(["bound", "1", "1", "2"]) == EXIT_IO


@pytest.mark.parametrize("argv,params,order", [
    (["3", "6", "--factor", "2"], {"a": 2, "b": 1, "g": 7}, 14),
    (["3", "5", "--factor", "1"], {"a": 1, "b": 2, "g": 8}, 10),
    (["7", "5", "--factor", "2", "--heavy"], {"a": 5, "b": 2, "g": 6}, 50),
])
def test_split_examples(capsys, argv, params, order):
    code, d = run_json(capsys, "split", *argv)
    assert code == EXIT_OK and d["params"] == params and d["order"] == order


def test_split_updates_db_upper_bound(capsys, tmp_path):
    db = tmp_path / "r.jsonl"
    run(capsys, "split", "3", "8", "--factor", "2", "--hamiltonian", "--split-girth", "9", "--db", str(db))
    r = results_load(db).get(2, 1, 9)
    assert r.status is RStatus.BRACKETED and r.upper == 30


def test_split_missing_cage(capsys):
    assert run(capsys, "split", "5", "7", "--factor", "1")[0] == EXIT_FAIL


def test_catalog_list(capsys):
    code, d = run_json(capsys, "catalog", "list")
    names = [c["name"] for c in d["cages"]]
    assert code == EXIT_OK and "hoffman_singleton" in names and "benson" in names


def _values(cells):
    return [c["value"] for c in cells]


def test_table_g5_rows(capsys):
    code, d = run_json(capsys, "table", "5", "--a", "1..2", "--b", "1..8")
    assert code == EXIT_OK and not d["contradictions"]
    assert _values(d["cells"]) == ["inf", 4, 6, 6, 8, 8, 10, 10, 6, 7, 8, 9, 10, 11, 12, 13]


def test_table_g6_by_construction(capsys):
    code, d = run_json(capsys, "table", "6", "--a", "1", "--b", "1..8", "--policy", "construct")
    assert code == EXIT_OK and _values(d["cells"]) == [2 * b + 2 for b in range(1, 9)]
    assert {c["source"] for c in d["cells"]} == {"construct"}


def test_table_g9_markers(capsys):
    code, d = run_json(capsys, "table", "9", "--a", "1", "--b", "1..3")
    assert _values(d["cells"]) == [6, 14, 24]
    assert [c["excess"] for c in d["cells"]] == [0, 2, 4]
    assert [c["marker"] for c in d["cells"]] == [None, "bold", "blue"]
    text = run(capsys, "table", "9", "--a", "1", "--b", "1..3")[1]
    assert "14*" in text and "24^" in text


def test_table_search_policy_agrees(capsys):
    code, d = run_json(capsys, "table", "5", "--a", "1..2", "--b", "1..4", "--policy", "search")
    assert code == EXIT_OK and {c["source"] for c in d["cells"]} <= {"search", "nonexistence"}


def test_table_is_byte_identical(capsys):
    first = run(capsys, "table", "6", "--a", "1..4", "--b", "1..8")[1]
    assert run(capsys, "table", "6", "--a", "1..4", "--b", "1..8")[1] == first
    assert "\n" in first


def test_table_reports_contradiction(capsys, tmp_path):
    db = tmp_path / "r.jsonl"
    from wcages.results import Provenance, ResultRecord, ResultsDB, results_save
    results_save(ResultsDB([ResultRecord(1, 2, 5, RStatus.EXACT, 5, 5, None, Provenance.PAPER_TABLE)]), db)
    code, d = run_json(capsys, "table", "5", "--a", "1", "--b", "1..3", "--db", str(db))
    assert code == EXIT_FAIL and [c["b"] for c in d["contradictions"]] == [2]
