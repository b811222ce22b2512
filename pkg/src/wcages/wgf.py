"""WGF text format.

::

    wgf 1
    n <N>
    e <u> <v> <w>      # one per edge, 0 <= u < v < N, w in {1, 2}

Edges are sorted by ``(w, u, v)``; lines end in LF.
"""

from __future__ import annotations

import os
from pathlib import Path

from .wgraph import WGraph


class WGFError(ValueError):
    """Malformed WGF input; ``lineno`` is 1-based (0 when not line specific)."""

    def __init__(self, msg: str, lineno: int = 0):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {msg}" if lineno else msg)


def dumps(G: WGraph) -> str:
    lines = ["wgf 1", f"n {G.n}"]
    lines += [f"e {u} {v} {w}" for u, v, w in G.edges]
    return "\n".join(lines) + "\n"


def loads(text: str) -> WGraph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != "wgf 1":
        raise WGFError("expected header 'wgf 1'", 1)
    if len(lines) < 2:
        raise WGFError("missing vertex count line", 2)
    head = lines[1].split(" ")
    if len(head) != 2 or head[0] != "n" or not head[1].isdigit():
        raise WGFError("expected 'n <N>'", 2)
    n = int(head[1])
    light, heavy = [], []
    prev = None
    for i, line in enumerate(lines[2:], start=3):
        parts = line.split(" ")
        if len(parts) != 4 or parts[0] != "e" or not all(p.isdigit() for p in parts[1:]):
            raise WGFError(f"bad edge line {line!r}", i)
        u, v, w = map(int, parts[1:])
        if not u < v < n:
            raise WGFError(f"edge ({u},{v}) violates 0 <= u < v < n", i)
        if w not in (1, 2):
            raise WGFError(f"weight must be 1 or 2, got {w}", i)
        key = (w, u, v)
        if prev is not None and key <= prev:
            raise WGFError("edges not strictly sorted by (w,u,v)", i)
        prev = key
        (light if w == 1 else heavy).append((u, v))
    try:
        return WGraph.from_edges(n, light, heavy)
    except ValueError as exc:
        raise WGFError(str(exc)) from exc


def write(G: WGraph, path: str | os.PathLike) -> None:
    Path(path).write_bytes(dumps(G).encode("ascii"))


def read(path: str | os.PathLike) -> WGraph:
    data = Path(path).read_bytes()
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError as exc:
        raise WGFError("file is not ASCII") from exc
    if "\r" in text:
        raise WGFError("CR line endings are not allowed")
    return loads(text)
