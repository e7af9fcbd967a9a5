"""Polynomial-time certificates for threat, support, capture, loss and deadness.

Every detector here is a sufficient condition.  Each emitted :class:`Fact`
names the theorem it rests on, and the exact oracles in
:mod:`shannon_game.solver` can confirm it on small graphs.

Theorem tags used in facts:

``domts``, ``doubledom``
    two-vertex domination equals threat/support; mutually dominating
    pairs are lost/captured.
``threat_support``, ``triangle``
    clique tests for threat and support; the triangle-number test.
``threaten3``, ``threaten3_lemma``
    degree-3 vertex threatening all (two) of its neighbours.
``pairset``
    sets of dominated pairs whose dominated half threatens/supports the rest.
``winmulti``
    capture from first-player wins on subsets with empty intersection.
``vwdead_cor1``, ``vwdead_cor2``, ``vwdead``, ``dead_tedge``
    dead edges: transverse edges and edges inside a terminal's neighbourhood.
``vdead``, ``dead_tneighbour``, ``dead_ev``
    dead vertices: clique neighbourhoods, surrounded by a terminal, all
    edges dead.
``terminal_cut_win``, ``terminal_cut_win_cor``
    every (all but one) neighbour of a terminal threatened by distinct vertices.
"""
from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from itertools import combinations

from .graph import (
    Graph,
    GraphError,
    TerminalInSet,
    VertexSet,
    bits,
    component_of,
    connected_components,
    cut_set,
    is_clique,
    is_connected,
    mask_of,
    members,
    neighbourhood,
    short_set,
    surrounds,
    three_walks,
    triangle_count,
    two_walks,
)
from .solver import MultiGame, Player


class PreconditionFailed(GraphError):
    pass


class FactKind(str, enum.Enum):
    THREAT = "THREAT"
    SUPPORT = "SUPPORT"
    DEAD_EDGE = "DEAD_EDGE"
    DEAD_VERTEX = "DEAD_VERTEX"
    CAPTURED = "CAPTURED"
    LOST = "LOST"
    CUT_DOMINATES = "CUT_DOMINATES"
    SHORT_DOMINATES = "SHORT_DOMINATES"
    CUT_WINS = "CUT_WINS"
    SHORT_WINS = "SHORT_WINS"


@dataclass(frozen=True)
class Fact:
    """A certified statement about one graph.

    ``witnesses`` holds the vertex groups the statement is about, in a
    kind-specific order: (A, B) for threats and supports, (u, v) for dead
    edges, (v, S) for domination, the set for capture/loss.  For the two
    win kinds, ``mover`` is None when the win holds whoever moves first.
    """

    kind: FactKind
    tag: str
    witnesses: tuple[tuple[int, ...], ...]
    mover: Player | None = None

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for w in self.witnesses for v in w}))

    def line(self) -> str:
        groups = " ".join(",".join(map(str, w)) if w else "-" for w in self.witnesses)
        out = f"{self.kind.value} {self.tag} {groups}".rstrip()
        if self.mover is not None:
            out += f" first={self.mover}"
        return out

    def __str__(self) -> str:
        return self.line()


def _fact(kind: FactKind, tag: str, *groups: VertexSet, mover: Player | None = None) -> Fact:
    return Fact(kind, tag, tuple(members(g) for g in groups), mover)


def _check_pair(g: Graph, a: int, b: int) -> None:
    if (a | b) & g.terminals:
        raise TerminalInSet("threat and support are defined for terminal-free sets")
    if a & b:
        raise GraphError("sets must be disjoint")


# -- threat and support -----------------------------------------------------------

def threatens(g: Graph, a: VertexSet, b: VertexSet) -> bool:
    """``a`` threatens ``b``: cutting ``a`` makes shorting ``b`` the same as cutting it.

    Checked per connected component of ``b``: the component's neighbourhood,
    less ``a``, must be a clique.
    """
    a, b = mask_of(a), mask_of(b)
    _check_pair(g, a, b)
    return all(is_clique(g, neighbourhood(g, c) & ~a) for c in connected_components(g, b))


def threatens_by_definition(g: Graph, a: VertexSet, b: VertexSet) -> bool:
    a, b = mask_of(a), mask_of(b)
    _check_pair(g, a, b)
    h = cut_set(g, a)
    return short_set(h, b) == cut_set(h, b)


def surrounding_neighbours(g: Graph, b: VertexSet) -> int:
    """Neighbours of ``b`` adjacent to every other neighbour of ``b``."""
    nb = neighbourhood(g, b)
    return mask_of(x for x in bits(nb) if not (nb & ~(g.adj[x] | 1 << x)))


def supports(g: Graph, a: VertexSet, b: VertexSet) -> bool:
    """``a`` supports ``b``: after shorting ``a``, cutting ``b`` equals shorting it.

    When ``a`` is connected and not adjacent to ``b`` this is the test that
    every neighbour of a component of ``b`` outside its surrounding
    neighbours is adjacent to ``a``.  Otherwise shorting ``a`` can merge
    components of ``b`` or give them new neighbours, so the clique test is
    applied to ``b`` in the graph with ``a`` shorted.
    """
    a, b = mask_of(a), mask_of(b)
    _check_pair(g, a, b)
    if is_connected(g, a) and not a & neighbourhood(g, b):
        na = neighbourhood(g, a)
        for c in connected_components(g, b):
            loose = neighbourhood(g, c) & ~surrounding_neighbours(g, c)
            if loose & ~na:
                return False
        return True
    h = short_set(g, a)
    return all(is_clique(h, neighbourhood(h, c)) for c in connected_components(h, b))


def supports_by_definition(g: Graph, a: VertexSet, b: VertexSet) -> bool:
    a, b = mask_of(a), mask_of(b)
    _check_pair(g, a, b)
    h = short_set(g, a)
    return cut_set(h, b) == short_set(h, b)


def threat_by_triangles(g: Graph, v: int, s: VertexSet) -> bool:
    """Triangle-number test that the neighbours ``s`` threaten ``v``.

    With d = deg(v), n = |s| and m edges inside ``s``, the test is that the
    2-walks from ``s`` to ``v`` total T(v) - (d-n)(d-n-1)/2 + m.
    """
    s = mask_of(s)
    if g.terminals >> v & 1 or s & g.terminals:
        raise TerminalInSet("threat is defined for terminal-free sets")
    if s & ~g.adj[v]:
        raise GraphError("s must be a subset of the neighbourhood of v")
    d, n = g.degree(v), s.bit_count()
    m = sum((g.adj[u] & s).bit_count() for u in bits(s)) // 2
    x = triangle_count(g, v) - (d - n) * (d - n - 1) // 2
    return sum(two_walks(g, u, v) for u in bits(s)) == x + m


def threat_transfer(g: Graph, a: VertexSet, b: VertexSet) -> tuple[int, int]:
    """Given that ``a`` threatens ``b``, the neighbourhood of ``a`` (less ``b``) threatens ``a | b``."""
    a, b = mask_of(a), mask_of(b)
    if not threatens(g, a, b):
        raise PreconditionFailed("a does not threaten b")
    x = neighbourhood(g, a) & ~b
    if x & g.terminals:
        raise TerminalInSet("the transferred threat would include a terminal")
    return x, a | b


def single_threats(g: Graph) -> list[tuple[int, int]]:
    """Ordered pairs (a, b) of non-terminals with {a} threatening {b}."""
    nt = g.nonterminals
    out = []
    for b in bits(nt):
        nb = g.adj[b]
        if is_clique(g, nb):
            out.extend((a, b) for a in bits(nt & ~(1 << b)))
            continue
        for a in bits(nb & nt):
            if is_clique(g, nb & ~(1 << a)):
                out.append((a, b))
    return sorted(out)


def single_supports(g: Graph) -> list[tuple[int, int]]:
    nt = g.nonterminals
    return [(a, b) for a in bits(nt) for b in bits(nt & ~(1 << a))
            if supports(g, 1 << a, 1 << b)]


def threat_facts(g: Graph) -> list[Fact]:
    return [_fact(FactKind.THREAT, "threat_support", 1 << a, 1 << b) for a, b in single_threats(g)]


def support_facts(g: Graph) -> list[Fact]:
    return [_fact(FactKind.SUPPORT, "threat_support", 1 << a, 1 << b) for a, b in single_supports(g)]


# -- capture and loss constructions --------------------------------------------------

def mutual_pair_reduce(g: Graph) -> list[Fact]:
    """Mutually threatening pairs are lost, mutually supporting pairs captured."""
    out = []
    thr = set(single_threats(g))
    for a, b in sorted(thr):
        if a < b and (b, a) in thr:
            out.append(_fact(FactKind.LOST, "doubledom", 1 << a | 1 << b))
    for a, b in single_supports(g):
        if a < b and supports(g, 1 << b, 1 << a):
            out.append(_fact(FactKind.CAPTURED, "doubledom", 1 << a | 1 << b))
    return out


def _single_threatens(g: Graph, a: int, b: int) -> bool:
    return is_clique(g, g.adj[b] & ~(1 << a))


def degree3_collapse(g: Graph) -> list[Fact]:
    out = []
    for v in bits(g.nonterminals):
        nb = g.adj[v]
        if nb.bit_count() != 3 or nb & g.terminals:
            continue
        hit = [u for u in bits(nb) if _single_threatens(g, v, u)]
        if len(hit) == 3:
            out.append(_fact(FactKind.LOST, "threaten3", nb | 1 << v))
        elif len(hit) == 2:
            (w,) = bits(nb & ~mask_of(hit))
            out.append(_fact(FactKind.CUT_DOMINATES, "threaten3_lemma", 1 << w, nb | 1 << v))
    return out


def pairset_reduce(g: Graph, pairs: Iterable[tuple[int, int]]) -> Fact | None:
    """Lost/captured certificate from dominated pairs (a_i, b_i).

    Cut version: each {a_i} threatens {b_i} and B threatens A.  Short
    version: each {a_i} supports {b_i} and B supports A.
    """
    pairs = list(pairs)
    flat = [v for p in pairs for v in p]
    if not pairs or len(set(flat)) != len(flat):
        raise PreconditionFailed("pairs must be nonempty and vertex-disjoint")
    a = mask_of(p[0] for p in pairs)
    b = mask_of(p[1] for p in pairs)
    if (a | b) & g.terminals:
        raise TerminalInSet("pairs must be terminal-free")
    if all(_single_threatens(g, x, y) for x, y in pairs) and threatens(g, b, a):
        return _fact(FactKind.LOST, "pairset", a | b)
    if all(supports(g, 1 << x, 1 << y) for x, y in pairs) and supports(g, b, a):
        return _fact(FactKind.CAPTURED, "pairset", a | b)
    return None


def _iter_pairsets(g: Graph, max_pairs: int = 3) -> Iterator[Fact]:
    seen = set()
    for kind, cands in ((FactKind.LOST, single_threats(g)),
                        (FactKind.CAPTURED, single_supports(g))):
        for k in range(2, max_pairs + 1):
            for combo in combinations(cands, k):
                flat = [v for p in combo for v in p]
                if len(set(flat)) != len(flat):
                    continue
                a = mask_of(p[0] for p in combo)
                b = mask_of(p[1] for p in combo)
                if (kind, a | b) in seen:
                    continue
                ok = threatens(g, b, a) if kind is FactKind.LOST else supports(g, b, a)
                if ok:
                    seen.add((kind, a | b))
                    yield _fact(kind, "pairset", a | b)


def find_pairsets(g: Graph, max_pairs: int = 3) -> list[Fact]:
    return list(_iter_pairsets(g, max_pairs))


def or_rule_capture(g: Graph, s: VertexSet, subsets: Iterable[VertexSet]) -> bool:
    """Capture certificate: Short wins moving first on each subset, and the
    subsets have empty common intersection.

    Each subset game is played on the subgraph induced by the subset and the
    neighbourhood of ``s``, with Short aiming at the terminal adjacency that
    shorting all of ``s`` would produce.
    """
    s = mask_of(s)
    subsets = [mask_of(u) for u in subsets]
    if any(u & ~s for u in subsets):
        raise PreconditionFailed("every subset must lie inside s")
    if not subsets:
        return False
    common = s
    for u in subsets:
        common &= u
    if common:
        return False
    full = MultiGame(g, s)
    return all(_subset_first_win(g, full, u) for u in subsets)


def _subset_first_win(g: Graph, full: MultiGame, u: int) -> bool:
    if not u:
        return full.targets_coincide
    sub = MultiGame(g, u, short_target=full.short_target, link_terminals=full.link_terminals)
    return sub.can_force(sub.board, Player.SHORT, Player.SHORT)


def connected_subsets(g: Graph, within: int, max_size: int) -> Iterator[int]:
    """Connected vertex sets inside ``within`` with at most ``max_size`` members."""
    seen = set()
    frontier = [1 << v for v in bits(within)]
    while frontier:
        nxt = []
        for c in frontier:
            if c in seen:
                continue
            seen.add(c)
            yield c
            if c.bit_count() < max_size:
                ext = neighbourhood(g, c) & within
                nxt.extend(c | 1 << x for x in bits(ext))
        frontier = nxt


def _iter_or_captures(g: Graph, max_area: int = 4, max_subset: int = 4) -> Iterator[Fact]:
    nt = g.nonterminals
    for s in sorted(connected_subsets(g, nt, max_area), key=lambda m: (m.bit_count(), m)):
        if s.bit_count() < 2:
            continue
        t = neighbourhood(g, s)
        if is_clique(g, t):
            continue
        cands = [u for u in connected_subsets(g, s, min(max_subset, s.bit_count()))
                 if not t & ~neighbourhood(g, u)]
        common = s
        for u in cands:
            common &= u
        if common:
            continue
        full = MultiGame(g, s)
        winners = [u for u in cands if _subset_first_win(g, full, u)]
        common = s
        for u in winners:
            common &= u
        if winners and not common:
            yield _fact(FactKind.CAPTURED, "winmulti", s)


def find_or_captures(g: Graph, max_area: int = 4, max_subset: int = 4) -> list[Fact]:
    return list(_iter_or_captures(g, max_area, max_subset))


# -- dead edges and vertices --------------------------------------------------------

@dataclass(frozen=True)
class _EdgeBatch:
    """Edges dead by one theorem application; they may be deleted together."""

    tag: str
    edges: tuple[tuple[int, int], ...]


def _edges_between(g: Graph, w: int, u: int) -> tuple[tuple[int, int], ...]:
    return tuple((min(w, x), max(w, x)) for x in bits(g.adj[w] & u))


def _dead_edge_batches(g: Graph) -> Iterator[_EdgeBatch]:
    nt = g.nonterminals
    for t in bits(g.terminals):
        nb = g.adj[t]
        es = tuple((u, v) for u in bits(nb) for v in bits(g.adj[u] & nb) if u < v)
        if es:
            yield _EdgeBatch("dead_tedge", es)
    for v in bits(nt):
        d = g.degree(v)
        for w in bits(g.adj[v]):
            if two_walks(g, v, w) == d - 1:
                yield _EdgeBatch("vwdead_cor1", ((min(v, w), max(v, w)),))
    for v in bits(nt):
        closed = g.adj[v] | 1 << v
        walk2 = sum(g.degree(x) for x in bits(g.adj[v]))
        near = 0
        for x in bits(closed):
            near |= g.adj[x]
        for w in bits(near & ~(1 << v)):
            for u in {closed & ~(1 << w), closed & nt & ~(1 << w)}:
                if u & g.terminals or not u >> v & 1:
                    continue
                es = _edges_between(g, w, u)
                if not es or not surrounds(g, w, u):
                    continue
                tag = "vwdead"
                if not closed & g.terminals and u == closed & ~(1 << w):
                    if three_walks(g, v, w) == walk2 - two_walks(g, v, w):
                        tag = "vwdead_cor2"
                yield _EdgeBatch(tag, es)


def dead_edges(g: Graph) -> list[Fact]:
    """Dead-edge facts, one per edge, tagged with the first theorem that applies."""
    found: dict[tuple[int, int], str] = {}
    for batch in _dead_edge_batches(g):
        for e in batch.edges:
            found.setdefault(e, batch.tag)
    return [_fact(FactKind.DEAD_EDGE, tag, (e[0],), (e[1],)) for e, tag in sorted(found.items())]


def _dead_vertex_sets(g: Graph) -> Iterator[tuple[str, int]]:
    nt = g.nonterminals
    for v in bits(nt):
        if is_clique(g, g.adj[v]):
            yield "vdead", 1 << v
    for v in bits(nt):
        u = (g.adj[v] | 1 << v) & nt
        if is_clique(g, neighbourhood(g, u)):
            yield "vdead", u
    # terminal-free components hanging off a clique of size <= 2
    cliques = [0] + [1 << x for x in bits(g.alive)] + [1 << u | 1 << v for u, v in g.edges()]
    for k in cliques:
        for c in connected_components(g, g.alive & ~k):
            if not c & g.terminals:
                yield "vdead", c
    for t in bits(g.terminals):
        closed_t = g.adj[t] | 1 << t
        for c in connected_components(g, g.alive & ~closed_t):
            if not c & g.terminals:
                yield "dead_tneighbour", c
        for v in bits(nt):
            for u in (1 << v, (g.adj[v] | 1 << v) & nt):
                if not neighbourhood(g, u) & ~closed_t:
                    yield "dead_tneighbour", u


def dead_vertices(g: Graph) -> list[Fact]:
    """Dead-vertex facts, one per vertex, tagged with the first theorem that applies."""
    found: dict[int, str] = {}
    for tag, u in _dead_vertex_sets(g):
        for v in bits(u):
            found.setdefault(v, tag)
    dead_e = {f.witnesses[0] + f.witnesses[1] for f in dead_edges(g)}
    for v in bits(g.nonterminals):
        if v in found:
            continue
        if all((min(v, x), max(v, x)) in dead_e for x in bits(g.adj[v])):
            found[v] = "dead_ev"
    return [_fact(FactKind.DEAD_VERTEX, tag, 1 << v) for v, tag in sorted(found.items())]


# -- terminal wins ----------------------------------------------------------------------

def _max_matching(cands: dict[int, list[int]]) -> dict[int, int]:
    """Maximum bipartite matching, left -> right, by augmenting paths."""
    match_r: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for x in cands[u]:
            if x in seen:
                continue
            seen.add(x)
            if x not in match_r or augment(match_r[x], seen):
                match_r[x] = u
                return True
        return False

    for u in sorted(cands):
        augment(u, set())
    return {u: x for x, u in match_r.items()}


def terminal_cut_win(g: Graph) -> Fact | None:
    """Cut win when a terminal's neighbours are threatened by distinct vertices.

    Threatening vertices are taken outside the terminal's closed
    neighbourhood so that the pairs are disjoint.  With one neighbour left
    unmatched the win needs Cut to move first, at that neighbour.
    """
    ts = g.terminal_list()
    if len(ts) != 2 or g.has_edge(*ts):
        return None
    best = None
    for t in ts:
        nb = g.adj[t]
        pool = g.nonterminals & ~(nb | 1 << t)
        cands = {u: [x for x in bits(pool) if _single_threatens(g, x, u)] for u in bits(nb)}
        m = _max_matching(cands)
        if len(m) == len(cands):
            return _fact(FactKind.CUT_WINS, "terminal_cut_win", 1 << t, nb,
                         mask_of(m[u] for u in sorted(m)))
        if len(m) == len(cands) - 1 and best is None:
            (free,) = [u for u in cands if u not in m]
            best = _fact(FactKind.CUT_WINS, "terminal_cut_win_cor", 1 << t, 1 << free,
                         mask_of(m.values()), mover=Player.CUT)
    return best


# -- fill-in ----------------------------------------------------------------------

@dataclass
class Step:
    """One fill-in action: the facts behind it and the graph they hold in."""

    graph: Graph
    facts: list[Fact]


@dataclass
class DetectionReport:
    facts: list[Fact]
    reduced: Graph
    steps: list[Step] = field(default_factory=list)

    def lines(self) -> list[str]:
        return sorted({f.line() for f in self.facts})

    def format(self) -> str:
        return "".join(line + "\n" for line in self.lines())


def _terminal_status(g: Graph) -> Fact | None:
    ts = g.terminal_list()
    if len(ts) != 2:
        return None
    t1, t2 = ts
    if g.has_edge(t1, t2):
        return _fact(FactKind.SHORT_WINS, "terminals_adjacent", g.terminals)
    if not component_of(g, t1) >> t2 & 1:
        return _fact(FactKind.CUT_WINS, "terminals_separated", g.terminals)
    return None


def _next_action(g: Graph, use_or_rule: bool) -> tuple[list[Fact], Graph] | None:
    for batch in _dead_edge_batches(g):
        facts = [_fact(FactKind.DEAD_EDGE, batch.tag, (u,), (v,)) for u, v in batch.edges]
        return facts, g.remove_edges(batch.edges)
    dv = dead_vertices(g)
    if dv:
        return dv, cut_set(g, mask_of(f.witnesses[0][0] for f in dv))
    candidates = [mutual_pair_reduce, degree3_collapse]
    for detect in candidates:
        for f in detect(g):
            if f.kind is FactKind.LOST:
                return [f], cut_set(g, f.witnesses[0])
            if f.kind is FactKind.CAPTURED:
                return [f], short_set(g, f.witnesses[0])
    for f in _iter_pairsets(g):
        op = cut_set if f.kind is FactKind.LOST else short_set
        return [f], op(g, f.witnesses[0])
    if use_or_rule:
        for f in _iter_or_captures(g):
            return [f], short_set(g, f.witnesses[0])
    return None


def fill_in(g: Graph, *, use_or_rule: bool = True, max_steps: int = 10_000) -> DetectionReport:
    """Apply free moves to a fixpoint.

    One action per round, in the order: dead edges (one theorem application
    at a time), dead vertices (cut together), mutual pairs, degree-3
    collapse, pair-sets, OR-rule captures.  Lost sets and dead vertices are
    cut, captured sets shorted.  Stops early once the terminals are
    adjacent or separated.
    """
    facts: list[Fact] = []
    steps: list[Step] = []
    cur = g
    for _ in range(max_steps):
        done = _terminal_status(cur)
        if done is not None:
            facts.append(done)
            steps.append(Step(cur, [done]))
            break
        act = _next_action(cur, use_or_rule)
        if act is None:
            break
        new_facts, nxt = act
        facts.extend(new_facts)
        steps.append(Step(cur, new_facts))
        cur = nxt
    else:
        raise RuntimeError("fill-in did not reach a fixpoint")
    if _terminal_status(cur) is None and len(cur.terminal_list()) == 2:
        win = terminal_cut_win(cur)
        if win is not None:
            facts.append(win)
            steps.append(Step(cur, [win]))
    return DetectionReport(facts, cur, steps)


def analyse(g: Graph, *, use_or_rule: bool = True) -> list[Fact]:
    """Every detector run once on ``g`` itself, without reducing."""
    out: list[Fact] = []
    out += dead_edges(g)
    out += dead_vertices(g)
    out += mutual_pair_reduce(g)
    out += degree3_collapse(g)
    out += find_pairsets(g)
    if use_or_rule:
        out += find_or_captures(g)
    if len(g.terminal_list()) == 2:
        win = terminal_cut_win(g)
        if win is not None:
            out.append(win)
    return out
