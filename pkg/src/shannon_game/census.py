"""Property census over connected small graphs.

Columns, for each order n:

total
    connected graphs (one per isomorphism class)
simplicial_free
    no vertex has a clique neighbourhood
transverse_free
    no edge vw where w surrounds v, i.e. A^2(v, w) = d(v) - 1
two_triangle_free
    at least two vertices lie on no triangle
both
    transverse-free and at least two triangle-free vertices
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from itertools import islice, permutations, product
from typing import NamedTuple

from .graph import Graph, MalformedGraph6, bits, decode_graph6


class Flags(NamedTuple):
    simplicial_free: bool
    transverse_free: bool
    two_triangle_free: bool
    both: bool


@dataclass
class CensusRow:
    n: int
    total: int = 0
    simplicial_free: int = 0
    transverse_free: int = 0
    two_triangle_free: int = 0
    both: int = 0

    def add(self, f: Flags) -> None:
        self.total += 1
        self.simplicial_free += f.simplicial_free
        self.transverse_free += f.transverse_free
        self.two_triangle_free += f.two_triangle_free
        self.both += f.both

    def merge(self, other: "CensusRow") -> "CensusRow":
        if other.n != self.n:
            raise ValueError("cannot merge rows of different orders")
        return CensusRow(self.n, *(getattr(self, f.name) + getattr(other, f.name)
                                   for f in fields(self)[1:]))

    def as_tuple(self) -> tuple[int, ...]:
        return (self.n, self.total, self.simplicial_free, self.transverse_free,
                self.two_triangle_free, self.both)

    def tsv(self) -> str:
        return "\t".join(map(str, self.as_tuple()))


def classify(g: Graph) -> Flags:
    adj = g.adj
    simplicial_free = True
    transverse_free = True
    tri_free = 0
    for v in bits(g.alive):
        nb = adj[v]
        d = nb.bit_count()
        tri = 0
        for u in bits(nb):
            common = (adj[u] & nb).bit_count()
            tri += common
            # u surrounds v exactly when every other neighbour of v is adjacent to u
            if common == d - 1:
                transverse_free = False
        if tri == d * (d - 1):
            simplicial_free = False
        if tri == 0:
            tri_free += 1
    two = tri_free >= 2
    return Flags(simplicial_free, transverse_free, two, transverse_free and two)


def _count(n: int, records: list[tuple[int, str]]) -> CensusRow:
    row = CensusRow(n)
    for offset, rec in records:
        g = decode_graph6(rec, offset)
        if g.n != n:
            raise MalformedGraph6(f"order {g.n}, expected {n}", offset)
        row.add(classify(g))
    return row


def _records(stream: Iterable[str | bytes]) -> Iterator[tuple[int, str]]:
    for i, line in enumerate(stream):
        if isinstance(line, bytes):
            line = line.decode("ascii")
        line = line.strip()
        if line.startswith(">>graph6<<"):
            line = line[len(">>graph6<<"):]
        if line:
            yield i, line


def run_census(stream: Iterable[str | bytes], n: int, *, workers: int = 1,
               chunk: int = 20_000) -> CensusRow:
    """Fold :func:`classify` over a graph6 stream of connected n-vertex graphs."""
    recs = _records(stream)
    if workers <= 1:
        return _count(n, list(recs))
    row = CensusRow(n)
    with ProcessPoolExecutor(workers) as pool:
        futures = []
        while batch := list(islice(recs, chunk)):
            futures.append(pool.submit(_count, n, batch))
        for fut in futures:
            row = row.merge(fut.result())
    return row


def census_graphs(graphs: Iterable[Graph], n: int) -> CensusRow:
    row = CensusRow(n)
    for g in graphs:
        row.add(classify(g))
    return row


# -- small exhaustive generator ------------------------------------------------------

def _refine(g: Graph, verts: list[int]) -> list[list[int]]:
    """Ordered equitable partition by iterated neighbour counts."""
    colour = {v: 0 for v in verts}
    while True:
        sig = {v: (colour[v], tuple(sorted(colour[u] for u in bits(g.adj[v])))) for v in verts}
        keys = sorted(set(sig.values()))
        new = {v: keys.index(sig[v]) for v in verts}
        if len(keys) == len(set(colour.values())):
            break
        colour = new
    cells: dict[int, list[int]] = {}
    for v in verts:
        cells.setdefault(colour[v], []).append(v)
    return [cells[k] for k in sorted(cells)]


def _code(g: Graph, order: tuple[int, ...]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = g.adj[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def canonical_form(g: Graph) -> Graph:
    """Canonical relabelling of the alive vertices onto 0..k-1.

    Relabellings are restricted to those respecting the (isomorphism
    invariant) refined degree partition; among them the adjacency code is
    maximised.
    """
    verts = list(bits(g.alive))
    cells = _refine(g, verts)
    best, best_order = -1, None
    for parts in product(*(permutations(c) for c in cells)):
        order = tuple(v for p in parts for v in p)
        c = _code(g, order)
        if c > best:
            best, best_order = c, order
    pos = {v: i for i, v in enumerate(best_order)}
    k = len(verts)
    return Graph.from_edges(k, [(pos[u], pos[v]) for u, v in g.edges()])


def enumerate_connected(n: int) -> Iterator[Graph]:
    """All connected graphs on ``n`` vertices, one per isomorphism class (n <= 7).

    Every connected graph has a vertex whose removal leaves it connected,
    so adding a vertex to each connected (n-1)-vertex graph in every
    possible way reaches all classes.
    """
    if not 1 <= n <= 7:
        raise ValueError("the built-in generator covers 1 <= n <= 7")
    level = {Graph(1, [0])}
    for k in range(2, n + 1):
        nxt = set()
        for g in level:
            for s in range(1, 1 << (k - 1)):
                rows = list(g.adj) + [s]
                for u in bits(s):
                    rows[u] |= 1 << (k - 1)
                nxt.add(canonical_form(Graph(k, rows, check=False)))
        level = nxt
    yield from sorted(level, key=lambda g: g.adj)
