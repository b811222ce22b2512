"""Results database of n(a,b,g) values: JSON lines, one record per line.

Records are written with sorted keys and sorted by ``(a, b, g)`` so a save
followed by a load reproduces the file byte for byte.  Writers hold an
exclusive ``fcntl`` lock on ``<path>.lock``.
"""

from __future__ import annotations

import contextlib
import enum
import fcntl
import json
import os
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path

from .wgraph import INF


class RStatus(str, enum.Enum):
    EXACT = "EXACT"
    BRACKETED = "BRACKETED"
    NONEXISTENT = "NONEXISTENT"


class Provenance(str, enum.Enum):
    PAPER_TABLE = "PAPER_TABLE"
    CONSTRUCTED = "CONSTRUCTED"
    SEARCHED = "SEARCHED"


class ResultsError(ValueError):
    def __init__(self, msg: str, lineno: int = 0):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {msg}" if lineno else msg)


class MergeConflict(ValueError):
    pass


def _num(x):
    return "inf" if x == INF else int(x)


def _parse_num(x, lineno):
    if x == "inf":
        return INF
    if isinstance(x, int) and not isinstance(x, bool):
        return x
    raise ResultsError(f"expected integer or 'inf', got {x!r}", lineno)


@dataclass(frozen=True)
class ResultRecord:
    a: int
    b: int
    g: int
    status: RStatus
    lower: float
    upper: float
    witness: str | None = None
    provenance: Provenance = Provenance.SEARCHED
    timestamp: str = ""

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"lower {self.lower} > upper {self.upper}")
        if self.status is RStatus.EXACT:
            if self.lower != self.upper:
                raise ValueError("EXACT record needs lower == upper")
            # table values are trusted without a stored witness
            if self.witness is None and self.provenance is not Provenance.PAPER_TABLE:
                raise ValueError("EXACT record needs a witness")
        if self.status is RStatus.NONEXISTENT and self.lower != INF:
            raise ValueError("NONEXISTENT record has lower = upper = inf")

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.g)

    def to_json(self) -> str:
        d = {
            "a": self.a, "b": self.b, "g": self.g,
            "status": self.status.value,
            "lower": _num(self.lower), "upper": _num(self.upper),
            "witness": self.witness,
            "provenance": self.provenance.value,
            "timestamp": self.timestamp,
        }
        return json.dumps(d, sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_json(cls, line: str, lineno: int = 0) -> "ResultRecord":
        try:
            d = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ResultsError(f"invalid JSON: {exc.msg}", lineno) from exc
        keys = {"a", "b", "g", "status", "lower", "upper", "witness", "provenance", "timestamp"}
        if not isinstance(d, dict) or set(d) != keys:
            raise ResultsError(f"expected keys {sorted(keys)}", lineno)
        try:
            return cls(
                a=int(d["a"]), b=int(d["b"]), g=int(d["g"]),
                status=RStatus(d["status"]),
                lower=_parse_num(d["lower"], lineno), upper=_parse_num(d["upper"], lineno),
                witness=d["witness"], provenance=Provenance(d["provenance"]),
                timestamp=str(d["timestamp"]),
            )
        except (ValueError, TypeError) as exc:
            if isinstance(exc, ResultsError):
                raise
            raise ResultsError(str(exc), lineno) from exc


def merge_records(old: ResultRecord, new: ResultRecord) -> ResultRecord:
    """Lattice join of two records for the same parameters."""
    if old.key != new.key:
        raise ValueError("records for different parameters")
    s_old, s_new = old.status, new.status
    if RStatus.NONEXISTENT in (s_old, s_new):
        if s_old is s_new:
            return old
        raise MergeConflict(f"{old.key}: NONEXISTENT conflicts with a finite record")
    if s_old is RStatus.EXACT and s_new is RStatus.EXACT:
        if old.lower != new.lower:
            raise MergeConflict(f"{old.key}: EXACT {_num(old.lower)} vs EXACT {_num(new.lower)}")
        return old if old.witness or not new.witness else new
    if s_old is RStatus.EXACT or s_new is RStatus.EXACT:
        ex, br = (old, new) if s_old is RStatus.EXACT else (new, old)
        if not br.lower <= ex.lower <= br.upper:
            raise MergeConflict(f"{ex.key}: EXACT {_num(ex.lower)} outside [{_num(br.lower)}, {_num(br.upper)}]")
        return ex
    lower = max(old.lower, new.lower)
    upper = min(old.upper, new.upper)
    if lower > upper:
        raise MergeConflict(f"{old.key}: empty bracket [{_num(lower)}, {_num(upper)}]")
    witness = new.witness if new.upper <= old.upper and new.witness else old.witness
    return replace(old, lower=lower, upper=upper, witness=witness,
                   timestamp=max(old.timestamp, new.timestamp))


class ResultsDB:
    def __init__(self, records=()):
        self.records: dict[tuple[int, int, int], ResultRecord] = {}
        for r in records:
            self.add(r)

    def add(self, rec: ResultRecord) -> ResultRecord:
        cur = self.records.get(rec.key)
        merged = rec if cur is None else merge_records(cur, rec)
        self.records[rec.key] = merged
        return merged

    def get(self, a: int, b: int, g: int) -> ResultRecord | None:
        return self.records.get((a, b, g))

    def __iter__(self):
        return iter(sorted(self.records.values(), key=lambda r: r.key))

    def __len__(self):
        return len(self.records)

    def __eq__(self, other):
        return isinstance(other, ResultsDB) and self.records == other.records

    def dumps(self) -> str:
        return "".join(r.to_json() + "\n" for r in self)

    @classmethod
    def loads(cls, text: str) -> "ResultsDB":
        db = cls()
        for i, line in enumerate(text.split("\n"), start=1):
            if not line.strip():
                continue
            rec = ResultRecord.from_json(line, i)
            if rec.key in db.records:
                raise ResultsError(f"duplicate record for {rec.key}", i)
            db.records[rec.key] = rec
        return db


@contextlib.contextmanager
def locked(path: str | os.PathLike):
    """Exclusive writer lock on ``<path>.lock``."""
    lock = Path(str(path) + ".lock")
    lock.parent.mkdir(parents=True, exist_ok=True)
    with open(lock, "a") as fh:
        fcntl.flock(fh, fcntl.LOCK_EX)
        try:
            yield
        finally:
            fcntl.flock(fh, fcntl.LOCK_UN)


def results_load(path: str | os.PathLike) -> ResultsDB:
    data = Path(path).read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ResultsError("results file is not UTF-8") from exc
    return ResultsDB.loads(text)


def results_save(db: ResultsDB, path: str | os.PathLike) -> None:
    path = Path(path)
    with locked(path):
        tmp = path.with_name(path.name + ".tmp")
        tmp.write_bytes(db.dumps().encode("utf-8"))
        os.replace(tmp, path)


def results_update(path: str | os.PathLike, records) -> ResultsDB:
    """Merge ``records`` into the database at ``path`` under the lock."""
    path = Path(path)
    with locked(path):
        db = results_load(path) if path.exists() else ResultsDB()
        for r in records:
            db.add(r)
        tmp = path.with_name(path.name + ".tmp")
        tmp.write_bytes(db.dumps().encode("utf-8"))
        os.replace(tmp, path)
    return db


# ---------------------------------------------------------------------------
# published table seed
# ---------------------------------------------------------------------------

# rows: a -> values for b = 1, 2, ...; INF is infinite, None is blank
PAPER_TABLES: dict[int, dict[int, list]] = {
    5: {1: [INF, 4, 6, 6, 8, 8, 10, 10], 2: [6, 7, 8, 9, 10, 11, 12, 13],
        3: [12, 12, 14, 14, 16, 16, None, None], 4: [20, 19, 20, 21, None, None, None, None]},
    6: {1: [4, 6, 8, 10, 12, 14, 16, 18], 2: [8, 10, 12, 14, 16, 18, 20, None],
        3: [16, 18, 20, 22, 24, None, None, None], 4: [28, 30, 32, None, None, None, None, None]},
    7: {1: [INF, 10, 14, 18, 22], 2: [14, 19, None, None, None]},
    8: {1: [INF, 10, 16, 20], 2: [16, 24, None, None]},
    9: {1: [6, 14, 24], 2: [24, None, None]},
    10: {1: [INF, 16, 28], 2: [32, None, None]},
}

EXTRA_VALUES = {(1, 2, 11): 24, (1, 2, 12): 26, (5, 2, 6): 46}

SEED_FILE = "data/results.jsonl"


def table_entries():
    """``((a, b, g), value)`` for every square; value is an int, ``INF`` or ``None`` (blank)."""
    for g, rows in PAPER_TABLES.items():
        for a, row in rows.items():
            for b, v in enumerate(row, start=1):
                yield (a, b, g), v


def build_seed(upper_for=None) -> ResultsDB:
    """Seed database: table values as EXACT/NONEXISTENT, blanks as brackets.

    ``upper_for(p)`` gives the order of the best available construction
    (or ``INF``); by default the construction module is used.
    """
    from .bounds import moore_bounds
    from .wgraph import Params

    if upper_for is None:
        upper_for = _best_construction_order
    db = ResultsDB()
    for (a, b, g), v in table_entries():
        if v == INF:
            db.add(ResultRecord(a, b, g, RStatus.NONEXISTENT, INF, INF, None, Provenance.PAPER_TABLE))
        elif v is None:
            lo = moore_bounds(Params(a, b, g)).combined
            db.add(ResultRecord(a, b, g, RStatus.BRACKETED, lo, upper_for(Params(a, b, g)), None,
                                Provenance.CONSTRUCTED))
        else:
            db.add(ResultRecord(a, b, g, RStatus.EXACT, v, v, None, Provenance.PAPER_TABLE))
    for (a, b, g), v in EXTRA_VALUES.items():
        db.add(ResultRecord(a, b, g, RStatus.EXACT, v, v, None, Provenance.PAPER_TABLE))
    return db


def _best_construction_order(p) -> float:
    from .constructions import UnsupportedParameters, build_thm_construction, upper_bound_builders

    cands = [bw.graph.n for bw in upper_bound_builders(p)]
    if not cands:
        try:
            cands = [build_thm_construction(p).n]
        except UnsupportedParameters:
            return INF
    return min(cands)


def load_seed() -> ResultsDB:
    return ResultsDB.loads(resources.files("wcages").joinpath(SEED_FILE).read_text(encoding="utf-8"))
