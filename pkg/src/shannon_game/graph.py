"""Bitset graphs for the Shannon game and the two move operations.

A vertex set is an ``int`` bitmask throughout: bit ``v`` set means vertex
``v`` is a member.  Public functions that take a set also accept any
iterable of vertex indices and convert it with :func:`mask_of`.

Removing a vertex clears its alive bit and zeroes its row and column, so
indices never change during a game.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from typing import Union

MAX_ORDER = 128

VertexSet = Union[int, Iterable[int]]


class GraphError(ValueError):
    pass


class TerminalImmutable(GraphError):
    """A terminal was passed to cut or short."""


class NotAlive(GraphError):
    """The vertex has already been removed."""


class TerminalInSet(GraphError):
    """A vertex set that must be terminal-free contains a terminal."""


class MalformedGraph(GraphError):
    """Text or graph6 input could not be parsed."""


class MalformedGraph6(MalformedGraph):
    def __init__(self, msg: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            msg = f"record {offset}: {msg}"
        super().__init__(msg)


def mask_of(s: VertexSet) -> int:
    if isinstance(s, int):
        return s
    m = 0
    for v in s:
        m |= 1 << v
    return m


def bits(m: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def members(m: VertexSet) -> tuple[int, ...]:
    return tuple(bits(mask_of(m)))


class Graph:
    """Simple graph with stable vertex indices, alive mask and terminals.

    Instances are immutable and hashable; every operation returns a new
    graph.
    """

    __slots__ = ("n", "alive", "adj", "terminals", "_hash")

    def __init__(self, n: int, adj: Iterable[int], alive: int | None = None,
                 terminals: VertexSet = 0, *, check: bool = True):
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
        self.n = n
        self.adj = tuple(adj)
        self.alive = (1 << n) - 1 if alive is None else alive
        self.terminals = mask_of(terminals)
        self._hash = None
        if check:
            self._validate()

    def _validate(self) -> None:
        if len(self.adj) != self.n:
            raise GraphError("adjacency has wrong length")
        full = (1 << self.n) - 1
        if self.alive & ~full:
            raise GraphError("alive mask exceeds order")
        if self.terminals & ~self.alive:
            raise GraphError("terminals must be alive")
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise GraphError(f"self-loop at {v}")
            if row & ~self.alive or (row and not self.alive >> v & 1):
                raise GraphError(f"adjacency touches removed vertex at {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   terminals: VertexSet = ()) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, terminals=terminals)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and self.alive == other.alive
                and self.terminals == other.terminals and self.adj == other.adj)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.alive, self.terminals, self.adj))
        return self._hash

    def __repr__(self) -> str:
        es = " ".join(f"{u}-{v}" for u, v in self.edges())
        return (f"Graph(n={self.n}, alive={list(bits(self.alive))}, "
                f"terminals={list(bits(self.terminals))}, edges=[{es}])")

    # -- queries -----------------------------------------------------------

    def vertices(self) -> Iterator[int]:
        return bits(self.alive)

    @property
    def nonterminals(self) -> int:
        return self.alive & ~self.terminals

    def terminal_list(self) -> tuple[int, ...]:
        return tuple(bits(self.terminals))

    def is_alive(self, v: int) -> bool:
        return 0 <= v < self.n and bool(self.alive >> v & 1)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in bits(self.alive):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield u, v

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    # -- structural edits (no game semantics) ------------------------------

    def with_terminals(self, terminals: VertexSet) -> "Graph":
        return Graph(self.n, self.adj, self.alive, terminals)

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v or not (self.is_alive(u) and self.is_alive(v)):
            raise GraphError(f"cannot add edge {u}-{v}")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows, self.alive, self.terminals, check=False)

    def remove_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows, self.alive, self.terminals, check=False)

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.adj)
        for u, v in edges:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, rows, self.alive, self.terminals, check=False)

    def induced(self, s: VertexSet) -> "Graph":
        """Induced subgraph on ``s``; other vertices become non-alive.

        Terminals outside ``s`` are dropped.
        """
        keep = mask_of(s) & self.alive
        rows = [(r & keep) if keep >> v & 1 else 0 for v, r in enumerate(self.adj)]
        return Graph(self.n, rows, keep, self.terminals & keep, check=False)


def _check_playable(g: Graph, v: int) -> None:
    if not g.is_alive(v):
        raise NotAlive(f"vertex {v} is not alive")
    if g.terminals >> v & 1:
        raise TerminalImmutable(f"vertex {v} is a terminal")


def _remove(rows: list[int], v: int) -> None:
    clear = ~(1 << v)
    for u in bits(rows[v]):
        rows[u] &= clear
    rows[v] = 0


def cut(g: Graph, v: int) -> Graph:
    """Delete ``v`` (Cut's move)."""
    _check_playable(g, v)
    rows = list(g.adj)
    _remove(rows, v)
    return Graph(g.n, rows, g.alive & ~(1 << v), g.terminals, check=False)


def short(g: Graph, v: int) -> Graph:
    """Make the neighbourhood of ``v`` a clique, then delete ``v`` (Short's move)."""
    _check_playable(g, v)
    rows = list(g.adj)
    nb = rows[v]
    for u in bits(nb):
        rows[u] |= nb & ~(1 << u)
    _remove(rows, v)
    return Graph(g.n, rows, g.alive & ~(1 << v), g.terminals, check=False)


def _check_set(g: Graph, s: int) -> None:
    if s & ~g.alive:
        raise NotAlive(f"vertices {members(s & ~g.alive)} are not alive")
    if s & g.terminals:
        raise TerminalImmutable(f"vertices {members(s & g.terminals)} are terminals")


def cut_set(g: Graph, s: VertexSet) -> Graph:
    s = mask_of(s)
    _check_set(g, s)
    rows = list(g.adj)
    for v in bits(s):
        _remove(rows, v)
    return Graph(g.n, rows, g.alive & ~s, g.terminals, check=False)


def short_set(g: Graph, s: VertexSet) -> Graph:
    """Short every member of ``s`` in ascending index order."""
    s = mask_of(s)
    _check_set(g, s)
    rows = list(g.adj)
    for v in bits(s):
        nb = rows[v]
        for u in bits(nb):
            rows[u] |= nb & ~(1 << u)
        _remove(rows, v)
    return Graph(g.n, rows, g.alive & ~s, g.terminals, check=False)


def apply_colouring(g: Graph, shorted: VertexSet, cut_: VertexSet) -> Graph:
    """Cut ``cut_`` then short ``shorted`` (the two commute)."""
    return short_set(cut_set(g, cut_), shorted)


# -- local queries -----------------------------------------------------------

def neighbourhood(g: Graph, s: VertexSet) -> int:
    """Open neighbourhood: vertices outside ``s`` adjacent to a member."""
    s = mask_of(s)
    out = 0
    for v in bits(s):
        out |= g.adj[v]
    return out & ~s


def neighbourhood_closed(g: Graph, s: VertexSet) -> int:
    s = mask_of(s)
    return neighbourhood(g, s) | s


def is_clique(g: Graph, s: VertexSet) -> bool:
    s = mask_of(s)
    for v in bits(s):
        if (s & ~(1 << v)) & ~g.adj[v]:
            return False
    return True


def triangle_count(g: Graph, v: int) -> int:
    nb = g.adj[v]
    return sum((g.adj[u] & nb).bit_count() for u in bits(nb)) // 2


def two_walks(g: Graph, u: int, v: int) -> int:
    return (g.adj[u] & g.adj[v]).bit_count()


def three_walks(g: Graph, u: int, v: int) -> int:
    # sum over x in N(u) of |N(x) & N(v)|
    nv = g.adj[v]
    return sum((g.adj[x] & nv).bit_count() for x in bits(g.adj[u]))


def surrounds(g: Graph, w: int, u: VertexSet) -> bool:
    """True iff every neighbour of ``u`` is ``w`` or adjacent to ``w``."""
    u = mask_of(u)
    if u >> w & 1:
        raise GraphError(f"{w} is a member of the surrounded set")
    if u & g.terminals:
        raise TerminalInSet("surrounded set must be terminal-free")
    return not (neighbourhood(g, u) & ~(g.adj[w] | 1 << w))


def component_of(g: Graph, v: int, within: int | None = None) -> int:
    within = g.alive if within is None else within
    comp = frontier = 1 << v
    while frontier:
        nxt = 0
        for x in bits(frontier):
            nxt |= g.adj[x]
        frontier = nxt & within & ~comp
        comp |= frontier
    return comp


def connected_components(g: Graph, s: VertexSet) -> list[int]:
    """Components of the subgraph induced by ``s``, ordered by lowest member."""
    rest = mask_of(s)
    out = []
    while rest:
        v = (rest & -rest).bit_length() - 1
        c = component_of(g, v, rest)
        out.append(c)
        rest &= ~c
    return out


def is_connected(g: Graph, s: VertexSet | None = None) -> bool:
    s = g.alive if s is None else mask_of(s)
    if not s:
        return True
    v = (s & -s).bit_length() - 1
    return component_of(g, v, s) == s


def graphs_equal(g1: Graph, g2: Graph) -> bool:
    """Labelled equality: same alive set, terminals and adjacency."""
    return g1 == g2


# -- text format ---------------------------------------------------------------

def parse_graph_text(text: str) -> Graph:
    """Parse the ``n``/``t``/``e`` line format (``#`` starts a comment)."""
    n = None
    terms: list[int] = []
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        try:
            nums = [int(x) for x in rest]
        except ValueError:
            raise MalformedGraph(f"line {lineno}: non-integer field") from None
        if head == "n":
            if len(nums) != 1 or n is not None:
                raise MalformedGraph(f"line {lineno}: bad order line")
            n = nums[0]
        elif head == "t":
            terms.extend(nums)
        elif head == "e":
            if len(nums) != 2:
                raise MalformedGraph(f"line {lineno}: edge needs two endpoints")
            edges.append((nums[0], nums[1]))
        else:
            raise MalformedGraph(f"line {lineno}: unknown record {head!r}")
    if n is None:
        raise MalformedGraph("missing 'n' line")
    if any(not 0 <= t < n for t in terms) or len(set(terms)) != len(terms):
        raise MalformedGraph("bad terminal list")
    try:
        return Graph.from_edges(n, edges, terms)
    except GraphError as exc:
        raise MalformedGraph(str(exc)) from None


def format_graph_text(g: Graph) -> str:
    """Inverse of :func:`parse_graph_text` for fully alive graphs.

    Removed vertices are kept as isolated indices; they are listed in a
    comment so the round trip is explicit about it.
    """
    lines = [f"n {g.n}"]
    dead = members(((1 << g.n) - 1) & ~g.alive)
    if dead:
        lines.append("# removed " + " ".join(map(str, dead)))
    lines.append("t " + " ".join(map(str, g.terminal_list())) if g.terminals else "t")
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- graph6 ----------------------------------------------------------------------

def decode_graph6(record: str | bytes, offset: int | None = None) -> Graph:
    """Decode one graph6 record (orders up to 62)."""
    if isinstance(record, bytes):
        record = record.decode("ascii")
    rec = record.strip()
    if rec.startswith(">>graph6<<"):
        rec = rec[len(">>graph6<<"):]
    if not rec:
        raise MalformedGraph6("empty record", offset)
    data = [ord(c) - 63 for c in rec]
    if any(not 0 <= x < 64 for x in data):
        raise MalformedGraph6("byte outside graph6 range", offset)
    n = data[0]
    if n == 63:
        raise MalformedGraph6("orders above 62 are not supported", offset)
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(data) - 1 != need:
        raise MalformedGraph6(f"expected {need} payload bytes, got {len(data) - 1}", offset)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[1 + k // 6]
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    # padding bits must be zero
    if need and data[-1] & ((1 << (need * 6 - nbits)) - 1):
        raise MalformedGraph6("nonzero padding bits", offset)
    return Graph(n, rows, check=False)


def encode_graph6(g: Graph) -> str:
    """graph6 record for the alive vertices, relabelled in ascending order."""
    verts = members(g.alive)
    n = len(verts)
    if n > 62:
        raise GraphError("graph6 encoding limited to 62 vertices")
    out = [n + 63]
    acc = k = 0
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | g.has_edge(verts[i], verts[j])
            k += 1
            if k == 6:
                out.append(acc + 63)
                acc = k = 0
    if k:
        out.append((acc << (6 - k)) + 63)
    return "".join(map(chr, out))


def read_graph6_stream(lines: Iterable[str | bytes]) -> Iterator[Graph]:
    for i, line in enumerate(lines):
        if isinstance(line, bytes):
            line = line.decode("ascii")
        line = line.strip()
        if not line:
            continue
        yield decode_graph6(line, offset=i)
