"""Hex boards as Shannon-game graphs.

Cells are indexed row-major from the top-left: cell (r, c) is vertex
``r*m + c``.  Vertex ``m*m`` is the top terminal and ``m*m + 1`` the bottom
one.  Black (Short) connects top to bottom; White (Cut) prevents it.
Cell (r, c) touches (r-1, c), (r-1, c+1), (r, c-1), (r, c+1), (r+1, c-1)
and (r+1, c).

Board text format::

    hex 3
    .B.
    ...
    W..

Annotated boards may also contain ``d`` (dead), ``c`` (captured) and ``l``
(lost) on cells that were empty.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

from .detectors import DetectionReport, FactKind, fill_in
from .graph import Graph, MalformedGraph, bits, cut_set, mask_of, short_set

EMPTY, BLACK, WHITE = ".", "B", "W"
DEAD, CAPTURED, LOST = "d", "c", "l"
_STONES = {EMPTY, BLACK, WHITE}
_ALL = _STONES | {DEAD, CAPTURED, LOST}

_OFFSETS = ((-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0))


@dataclass(frozen=True)
class HexBoard:
    size: int
    cells: tuple[str, ...]

    def __post_init__(self):
        if self.size < 1 or len(self.cells) != self.size * self.size:
            raise MalformedGraph("board size does not match cell count")
        if not set(self.cells) <= _ALL:
            raise MalformedGraph(f"unknown cell symbols {sorted(set(self.cells) - _ALL)}")

    @classmethod
    def empty(cls, m: int) -> "HexBoard":
        return cls(m, (EMPTY,) * (m * m))

    @classmethod
    def from_rows(cls, rows: list[str]) -> "HexBoard":
        m = len(rows)
        if any(len(r) != m for r in rows):
            raise MalformedGraph("board rows must all have length m")
        b = cls(m, tuple("".join(rows)))
        b.check_alternation()
        return b

    @classmethod
    def parse(cls, text: str) -> "HexBoard":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        if not lines:
            raise MalformedGraph("empty board file")
        head = lines[0].split()
        if len(head) != 2 or head[0] != "hex" or not head[1].isdigit():
            raise MalformedGraph("first line must be 'hex <m>'")
        m = int(head[1])
        rows = lines[1:]
        if len(rows) != m:
            raise MalformedGraph(f"expected {m} board rows, got {len(rows)}")
        return cls.from_rows(rows)

    def format(self) -> str:
        m = self.size
        rows = ["".join(self.cells[r * m:(r + 1) * m]) for r in range(m)]
        return "\n".join([f"hex {m}", *rows]) + "\n"

    def at(self, r: int, c: int) -> str:
        return self.cells[r * self.size + c]

    def place(self, r: int, c: int, stone: str) -> "HexBoard":
        cells = list(self.cells)
        cells[r * self.size + c] = stone
        return HexBoard(self.size, tuple(cells))

    def check_alternation(self) -> None:
        nb, nw = self.cells.count(BLACK), self.cells.count(WHITE)
        if abs(nb - nw) > 1:
            warnings.warn(f"stone counts {nb} black / {nw} white differ by more than one",
                          stacklevel=2)


def neighbours(m: int, r: int, c: int) -> list[tuple[int, int]]:
    return [(r + dr, c + dc) for dr, dc in _OFFSETS if 0 <= r + dr < m and 0 <= c + dc < m]


def terminals(m: int) -> tuple[int, int]:
    return m * m, m * m + 1


def lattice_graph(m: int) -> Graph:
    """Empty-board graph: hex cells plus top and bottom terminals."""
    top, bottom = terminals(m)
    edges = []
    for r in range(m):
        for c in range(m):
            v = r * m + c
            edges += [(v, rr * m + cc) for rr, cc in neighbours(m, r, c) if rr * m + cc > v]
    edges += [(top, c) for c in range(m)]
    edges += [(bottom, (m - 1) * m + c) for c in range(m)]
    return Graph.from_edges(m * m + 2, edges, (top, bottom))


def to_graph(b: HexBoard) -> Graph:
    """Reduced graph of a position: Black cells shorted, White cells cut."""
    g = lattice_graph(b.size)
    black = mask_of(i for i, s in enumerate(b.cells) if s == BLACK)
    white = mask_of(i for i, s in enumerate(b.cells) if s == WHITE)
    return short_set(cut_set(g, white), black)


def annotate(b: HexBoard) -> tuple[HexBoard, DetectionReport]:
    """Fill in the position and mark empty cells dead, captured or lost."""
    report = fill_in(to_graph(b))
    marks: dict[int, str] = {}
    for f in report.facts:
        sym = {FactKind.DEAD_VERTEX: DEAD, FactKind.CAPTURED: CAPTURED,
               FactKind.LOST: LOST}.get(f.kind)
        if sym is None:
            continue
        for v in bits(mask_of(f.witnesses[0])):
            if v < b.size * b.size and b.cells[v] == EMPTY:
                marks.setdefault(v, sym)
    cells = tuple(marks.get(i, s) for i, s in enumerate(b.cells))
    return HexBoard(b.size, cells), report
