"""``wcage`` command-line front end.

Every command is a thin adapter over the library.  Exit codes: 0 success,
1 verification failure or table contradiction, 2 search budget exceeded,
3 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from . import wgf
from .bounds import moore_bounds, n0, wcycle_exists
from .catalog import CatalogError, default_catalog
from .constructions import (
    METHODS,
    UnsupportedParameters,
    construct,
    construct_g3,
    construct_g4,
    construct_g56,
    find_factor,
    g56_case,
    split_cage,
)
from .constructions.splitting import FactorStats
from .results import (
    MergeConflict,
    Provenance,
    ResultRecord,
    ResultsDB,
    ResultsError,
    RStatus,
    load_seed,
    results_load,
    results_update,
)
from .search import BUDGET_EXCEEDED, SearchConfig, Status, exists_wgraph, find_wcage
from .wgraph import HEAVY, INF, LIGHT, Params, WGraph, is_biregular, wgirth

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_BUDGET = 2
EXIT_IO = 3

BOLD, BLUE = "bold", "blue"
MARKERS = {2: BOLD, 4: BLUE}
MARK_TEXT = {BOLD: "*", BLUE: "^"}


class _Parser(argparse.ArgumentParser):
    # usage errors are parse errors, not "budget exceeded"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_IO, f"{self.prog}: error: {message}\n")


def _num(x):
    return "inf" if x == INF else x


def _budget(text: str) -> int:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid budget {text!r}") from None
    if v != v or v < 1 or v == INF:
        raise argparse.ArgumentTypeError("budget must be a positive node count")
    return int(v)


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        r = (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None
    if r[0] > r[1] or r[0] < 0:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return r


def _emit(args, data: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        for ln in lines:
            print(ln)


def _db_path(args) -> Path | None:
    p = args.db or os.environ.get("WCAGE_DB")
    return Path(p) if p else None


def _load_db(args) -> ResultsDB:
    path = _db_path(args)
    if path is not None and path.exists():
        return results_load(path)
    return load_seed()


def _record(path: Path | None, rec: ResultRecord) -> None:
    if path is not None:
        results_update(path, [rec])


def _now() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _params(args) -> Params:
    return Params(args.a, args.b, args.g)


def _cfg(args) -> SearchConfig:
    return SearchConfig(node_budget=args.budget, worker_count=args.workers, max_order=args.max_order)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_bound(args) -> int:
    rep = moore_bounds(_params(args))
    d = {k: _num(v) for k, v in rep.to_dict().items()}
    lines = [
        f"params   {rep.params}",
        f"M1 {rep.m1}  M2 {rep.m2}  M3 {rep.m3}",
        f"M1+ {rep.m1_plus}  M2+ {rep.m2_plus}  M3+ {rep.m3_plus}",
        f"moore    {rep.moore}",
        f"trivial  {rep.trivial}",
        f"combined {rep.combined}",
        f"exists   {'yes' if rep.exists else 'no (nonexistent)'}",
    ]
    _emit(args, d, lines)
    return EXIT_OK


def cmd_exists(args) -> int:
    p = _params(args)
    if args.order is None:
        ok = wcycle_exists(p)
        _emit(args, {"params": p.__dict__, "exists": ok}, [f"{p}: {'exists' if ok else 'nonexistent'}"])
        return EXIT_OK
    res = exists_wgraph(p, args.order, _cfg(args))
    if isinstance(res, WGraph):
        if args.out:
            wgf.write(res, args.out)
        verdict = "FOUND"
    else:
        verdict = "BUDGET_EXCEEDED" if res is BUDGET_EXCEEDED else "NONE"
    d = {"params": p.__dict__, "order": args.order, "verdict": verdict,
         "witness_wgf": wgf.dumps(res) if isinstance(res, WGraph) else None}
    _emit(args, d, [f"{p} on {args.order} vertices: {verdict}"])
    return EXIT_BUDGET if verdict == "BUDGET_EXCEEDED" else EXIT_OK


def _outcome_record(out) -> ResultRecord | None:
    a, b, g = out.params
    lower = moore_bounds(out.params).combined
    if out.status is Status.EXACT:
        return ResultRecord(a, b, g, RStatus.EXACT, out.value, out.value, wgf.dumps(out.witness),
                            Provenance.SEARCHED, _now())
    if out.status is Status.NONEXISTENT:
        return ResultRecord(a, b, g, RStatus.NONEXISTENT, INF, INF, None, Provenance.SEARCHED, _now())
    # every order below out.value was exhausted
    return ResultRecord(a, b, g, RStatus.BRACKETED, max(lower, out.value), INF, None,
                        Provenance.SEARCHED, _now())


def cmd_search(args) -> int:
    p = _params(args)
    out = find_wcage(p, _cfg(args))
    if out.witness is not None and args.out:
        wgf.write(out.witness, args.out)
    _record(_db_path(args), _outcome_record(out))
    lines = [f"{p}: {out.status.value} {_num(out.value)}",
             f"exhausted orders: {' '.join(str(n) for n, _ in out.exhausted_orders) or '-'}",
             f"nodes: {out.stats['nodes']}"]
    _emit(args, out.to_dict(), lines)
    return EXIT_BUDGET if out.status is Status.BUDGET_EXCEEDED else EXIT_OK


def _sidecar(out: str) -> Path:
    return Path(out).with_suffix(".provenance.json")


def cmd_construct(args) -> int:
    p = _params(args)
    try:
        G, prov = construct(p, args.method)
    except (UnsupportedParameters, ValueError) as exc:
        print(f"construct: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.out:
        wgf.write(G, args.out)
        _sidecar(args.out).write_text(prov.to_json() + "\n")
    d = {"params": p.__dict__, "order": G.n, "provenance": json.loads(prov.to_json()),
         "witness_wgf": wgf.dumps(G)}
    _emit(args, d, [f"{p}: order {G.n} via {prov.builder} case {prov.case}"])
    return EXIT_OK


def cmd_verify(args) -> int:
    G = wgf.read(args.file)
    p = _params(args)
    reasons = []
    bad = [v for v, d in enumerate(G.degrees()) if d != (p.a, p.b)]
    if bad:
        v = bad[0]
        reasons.append(f"degree: {len(bad)} vertices off ({p.a},{p.b}), first {v} has {G.degrees()[v]}")
    girth = wgirth(G)
    if girth != p.g:
        reasons.append(f"girth={_num(girth)}")
    ok = not reasons and is_biregular(G, p.a, p.b)
    d = {"params": p.__dict__, "ok": ok, "order": G.n, "girth": _num(girth), "reasons": reasons}
    _emit(args, d, [f"OK order {G.n} girth {_num(girth)}" if ok else "FAIL " + "; ".join(reasons)])
    return EXIT_OK if ok else EXIT_FAIL


@dataclass(frozen=True)
class TableSpec:
    g: int
    a_range: tuple[int, int]
    b_range: tuple[int, int]
    policy: str
    budget: int

    def __post_init__(self):
        if self.a_range[0] > self.a_range[1] or self.b_range[0] > self.b_range[1]:
            raise ValueError("table ranges must be nonempty")
        if self.budget <= 0:
            raise ValueError("table budget must be positive")
        if self.policy not in ("search", "construct", "db"):
            raise ValueError(f"unknown cell policy {self.policy!r}")


def _optimal_family(p: Params):
    """Order from an optimal-family construction, or None outside the families."""
    a, b, g = p
    if g == 3 and a >= 2:
        return construct_g3(a, b).n
    if g == 4 and a >= 2:
        return construct_g4(a, b).n
    if g56_case(a, b, g) is not None:
        return construct_g56(a, b, g).n
    return None


def _cell(p: Params, spec: TableSpec, db: ResultsDB, workers: int):
    """(value, source): value is an int, INF or None (unresolved)."""
    if not wcycle_exists(p):
        return INF, "nonexistence"
    if spec.policy == "construct":
        v = _optimal_family(p)
        if v is not None:
            return v, "construct"
    if spec.policy == "search":
        out = find_wcage(p, SearchConfig(node_budget=spec.budget, worker_count=workers))
        if out.status in (Status.EXACT, Status.NONEXISTENT):
            return out.value, "search"
    rec = db.get(*p)
    if rec is not None and rec.status is not RStatus.BRACKETED:
        return rec.lower, "db"
    return None, "unresolved"


def _contradicts(value, rec: ResultRecord | None) -> bool:
    if rec is None or value is None:
        return False
    if rec.status is RStatus.BRACKETED:
        return not rec.lower <= value <= rec.upper
    return value != rec.lower


def render_table(spec: TableSpec, db: ResultsDB, seed: ResultsDB, workers: int = 1):
    """Cells of the table plus the list of contradictions with ``seed``."""
    cells, conflicts = [], []
    for a in range(spec.a_range[0], spec.a_range[1] + 1):
        for b in range(spec.b_range[0], spec.b_range[1] + 1):
            p = Params(a, b, spec.g)
            value, source = _cell(p, spec, db, workers)
            exc = None if value in (None, INF) else int(value) - n0(a, b, spec.g)
            cell = {"a": a, "b": b, "value": _num(value), "source": source,
                    "excess": exc, "marker": MARKERS.get(exc)}
            cells.append(cell)
            if _contradicts(value, seed.get(a, b, spec.g)):
                conflicts.append(cell)
    return cells, conflicts


def _grid_lines(spec: TableSpec, cells) -> list[str]:
    bs = range(spec.b_range[0], spec.b_range[1] + 1)
    width = 6
    lines = [f"n(a,b,{spec.g})", "a\\b".ljust(4) + "".join(str(b).rjust(width) for b in bs)]
    by_a: dict[int, list[str]] = {}
    for c in cells:
        v = c["value"]
        txt = "" if v is None else str(v) + MARK_TEXT.get(c["marker"], "")
        by_a.setdefault(c["a"], []).append(txt.rjust(width))
    for a, row in by_a.items():
        lines.append(str(a).ljust(4) + "".join(row))
    lines.append("* excess 2 (bold)   ^ excess 4 (blue)   blank: unresolved")
    return lines


def cmd_table(args) -> int:
    spec = TableSpec(args.g, args.a, args.b, args.policy, args.budget)
    seed = load_seed()
    cells, conflicts = render_table(spec, _load_db(args), seed, args.workers)
    lines = _grid_lines(spec, cells)
    for c in conflicts:
        lines.append(f"CONTRADICTION at a={c['a']} b={c['b']}: {c['value']}")
    d = {"g": spec.g, "policy": spec.policy, "cells": cells, "contradictions": conflicts}
    _emit(args, d, lines)
    return EXIT_FAIL if conflicts else EXIT_OK


def cmd_split(args) -> int:
    cat = default_catalog()
    rec = cat.get_cage(args.r, args.g)
    if rec is None:
        print(f"split: no ({args.r},{args.g})-cage in the catalog", file=sys.stderr)
        return EXIT_FAIL
    X = rec.graph
    weight = HEAVY if args.heavy else LIGHT
    target = args.split_girth if args.split_girth is not None else args.g + 1
    stats = FactorStats()
    F = find_factor(X, args.factor, args.min_girth, hamiltonian=args.hamiltonian,
                    split_girth=target, factor_weight=weight, budget=args.budget, stats=stats)
    if F is None:
        msg = "factor search exhausted" if stats.exhausted else "factor search budget exceeded"
        print(f"split: {msg} after {stats.nodes} nodes", file=sys.stderr)
        return EXIT_FAIL if stats.exhausted else EXIT_BUDGET
    res = split_cage(X, F, factor_weight=weight)
    G, girth = res.graph, int(res.girth)
    if args.out:
        wgf.write(G, args.out)
    p = Params(res.a, res.b, girth)
    lower = moore_bounds(p).combined
    _record(_db_path(args), ResultRecord(res.a, res.b, girth, RStatus.BRACKETED, lower, G.n, wgf.dumps(G),
                                         Provenance.CONSTRUCTED, _now()))
    d = {"cage": {"r": args.r, "g": args.g, "name": rec.name, "order": rec.order},
         "params": p.__dict__, "order": G.n, "girth": girth, "window": list(res.window),
         "excess": G.n - n0(*p), "factor_nodes": stats.nodes, "witness_wgf": wgf.dumps(G)}
    lines = [f"{rec.name} ({args.r},{args.g})-cage split: {p}-wgraph of order {G.n}",
             f"girth {girth} in window [{res.window[0]}, {res.window[1]}], excess {G.n - n0(*p)}"]
    _emit(args, d, lines)
    return EXIT_OK


def cmd_catalog(args) -> int:
    recs = default_catalog().records()
    rows = [{"r": c.r, "g": c.g, "order": c.order, "name": c.name,
             "hamiltonian_cycle": c.hamiltonian_cycle is not None} for c in recs]
    lines = [f"({c['r']},{c['g']})  order {c['order']:>3}  {c['name']}"
             + ("  [hamiltonian]" if c["hamiltonian_cycle"] else "") for c in rows]
    _emit(args, {"cages": rows}, lines)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="stable-key JSON output")
    common.add_argument("--budget", type=_budget, default=50_000_000, help="search node budget (accepts 1e8)")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--db", help="results database (default: $WCAGE_DB)")
    common.add_argument("--out", help="write the witness as WGF")

    ap = _Parser(prog="wcage", description="Weighted cages n(a,b,g): bounds, constructions, search.")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def abg(sp):
        sp.add_argument("a", type=int)
        sp.add_argument("b", type=int)
        sp.add_argument("g", type=int)

    sp = sub.add_parser("bound", parents=[common], help="Moore-like lower bounds")
    abg(sp)
    sp.set_defaults(fn=cmd_bound)

    sp = sub.add_parser("exists", parents=[common], help="existence, or a search at one order")
    abg(sp)
    sp.add_argument("--order", type=int, help="search for a witness on this many vertices")
    sp.add_argument("--max-order", type=int, default=64)
    sp.set_defaults(fn=cmd_exists)

    sp = sub.add_parser("search", parents=[common], help="exhaustive search for n(a,b,g)")
    abg(sp)
    sp.add_argument("--max-order", type=int, default=64)
    sp.set_defaults(fn=cmd_search)

    sp = sub.add_parser("construct", parents=[common], help="explicit construction")
    abg(sp)
    sp.add_argument("--method", choices=[m for m in METHODS if m != "split"], default="auto")
    sp.set_defaults(fn=cmd_construct)

    sp = sub.add_parser("verify", parents=[common], help="check a WGF file")
    sp.add_argument("file")
    abg(sp)
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("table", parents=[common], help="regenerate a table of n(a,b,g)")
    sp.add_argument("g", type=int)
    sp.add_argument("--a", type=_range, default=(1, 2), metavar="LO..HI")
    sp.add_argument("--b", type=_range, default=(1, 8), metavar="LO..HI")
    sp.add_argument("--policy", choices=("db", "construct", "search"), default="db")
    sp.set_defaults(fn=cmd_table)

    sp = sub.add_parser("split", parents=[common], help="split a catalog cage along a factor")
    sp.add_argument("r", type=int)
    sp.add_argument("g", type=int)
    sp.add_argument("--factor", type=int, required=True, help="degree of the factor F")
    sp.add_argument("--heavy", action="store_true", help="make F heavy instead of light")
    sp.add_argument("--min-girth", type=int, help="minimum girth of F itself")
    sp.add_argument("--split-girth", type=int, help="minimum weighted girth of the split (default g+1)")
    sp.add_argument("--hamiltonian", action="store_true", help="F must be a Hamiltonian cycle")
    sp.set_defaults(fn=cmd_split, budget=2_000_000)

    sp = sub.add_parser("catalog", parents=[common], help="embedded cage catalog")
    sp.add_argument("action", choices=["list"])
    sp.set_defaults(fn=cmd_catalog)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "workers", 1) < 1:
        print("wcage: --workers must be positive", file=sys.stderr)
        return EXIT_IO
    try:
        return args.fn(args)
    except (OSError, wgf.WGFError, ResultsError, CatalogError) as exc:
        print(f"wcage: {exc}", file=sys.stderr)
        return EXIT_IO
    except MergeConflict as exc:
        print(f"wcage: results database conflict: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"wcage: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
