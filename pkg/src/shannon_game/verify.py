"""Exhaustive theorem checks over small connected graphs.

Each suite walks every connected graph up to some order (every terminal
pair where terminals matter) and compares a detector or a theorem against
the exact oracles.  A suite returns a :class:`SuiteResult`; a failure list
holds human-readable counterexamples.  Suites whose cost exceeds the
requested order cap are reported as skipped, never as passed.
"""
from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from itertools import combinations, permutations

from .census import enumerate_connected
from .detectors import (
    Fact,
    FactKind,
    analyse,
    fill_in,
    supports,
    supports_by_definition,
    threatens,
    threatens_by_definition,
)
from .graph import (
    Graph,
    bits,
    connected_components,
    cut,
    cut_set,
    format_graph_text,
    is_clique,
    is_connected,
    members,
    neighbourhood,
    short,
    short_set,
)
from .solver import (
    MultiGame,
    Player,
    dominates,
    is_captured,
    is_dead_edge_oracle,
    is_dead_vertex_oracle,
    is_lost,
    solve_graph,
)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    skipped: bool = False

    @property
    def passed(self) -> bool:
        return not self.skipped and not self.failures

    def fail(self, msg: str) -> None:
        self.failures.append(msg)

    def line(self) -> str:
        if self.skipped:
            return f"{self.name}: skipped"
        status = "pass" if self.passed else "FAIL"
        return f"{self.name}: {status} ({self.checked} checks, {len(self.failures)} failures)"


def graphs_upto(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from enumerate_connected(n)


def positions(max_n: int) -> Iterator[Graph]:
    """Every connected graph on 3..max_n vertices with every terminal pair."""
    for g in graphs_upto(max_n, 3):
        for t in combinations(range(g.n), 2):
            yield g.with_terminals(t)


def _show(g: Graph) -> str:
    return format_graph_text(g).replace("\n", "; ").strip("; ")


def _subsets(m: int, max_size: int) -> Iterator[int]:
    vs = list(bits(m))
    for k in range(1, min(max_size, len(vs)) + 1):
        for c in combinations(vs, k):
            yield sum(1 << v for v in c)


# -- graph-level identities ---------------------------------------------------------

def commutation(max_n: int) -> SuiteResult:
    r = SuiteResult("commutation")
    ops = (cut, short)
    for g in graphs_upto(max_n, 2):
        for u, v in permutations(range(g.n), 2):
            for x in ops:
                for y in ops:
                    r.checked += 1
                    if x(y(g, u), v) != y(x(g, v), u):
                        r.fail(f"{x.__name__}/{y.__name__} on {u},{v} in {_show(g)}")
    return r


def clique_lemma(max_n: int) -> SuiteResult:
    """short_set = cut_set exactly when every component's neighbourhood is a clique."""
    r = SuiteResult("clique_lemma")
    for g in graphs_upto(max_n):
        for s in _subsets(g.alive, g.n):
            r.checked += 1
            equal = short_set(g, s) == cut_set(g, s)
            if is_connected(g, s) and equal != is_clique(g, neighbourhood(g, s)):
                r.fail(f"connected S={members(s)} in {_show(g)}")
            per = all(is_clique(g, neighbourhood(g, c)) for c in connected_components(g, s))
            if equal != per:
                r.fail(f"components of S={members(s)} in {_show(g)}")
    return r


# -- threat, support, domination ---------------------------------------------------------

def _disjoint_pairs(g: Graph, max_size: int) -> Iterator[tuple[int, int]]:
    free = g.nonterminals
    for a in _subsets(free, max_size):
        for b in _subsets(free & ~a, max_size):
            yield a, b


def fast_path(max_n: int) -> SuiteResult:
    """The clique tests agree with the defining graph identities."""
    r = SuiteResult("fast_path")
    for g in positions(max_n):
        for a, b in _disjoint_pairs(g, g.n):
            r.checked += 1
            if threatens(g, a, b) != threatens_by_definition(g, a, b):
                r.fail(f"threat {members(a)}->{members(b)} in {_show(g)}")
            if supports(g, a, b) != supports_by_definition(g, a, b):
                r.fail(f"support {members(a)}->{members(b)} in {_show(g)}")
    return r


def domts(max_n: int) -> SuiteResult:
    """v P-dominates {v, w} exactly when v threatens (supports) w."""
    r = SuiteResult("domts")
    for g in positions(max_n):
        for v, w in permutations(bits(g.nonterminals), 2):
            r.checked += 1
            d = dominates(g, v, (1 << v) | (1 << w))
            if d[Player.CUT] != threatens_by_definition(g, 1 << v, 1 << w):
                r.fail(f"cut {v} over {{{v},{w}}} in {_show(g)}")
            if d[Player.SHORT] != supports_by_definition(g, 1 << v, 1 << w):
                r.fail(f"short {v} over {{{v},{w}}} in {_show(g)}")
    return r


def robustness(max_n: int, max_size: int = 2) -> SuiteResult:
    """Threats and supports survive play outside the threatening set."""
    r = SuiteResult("robustness")
    for g in positions(max_n):
        for a, b in _disjoint_pairs(g, max_size):
            thr = threatens_by_definition(g, a, b)
            sup = supports_by_definition(g, a, b)
            if not (thr or sup):
                continue
            for x in bits(g.nonterminals & ~a):
                rest = b & ~(1 << x)
                if not rest:
                    continue
                for h in (cut(g, x), short(g, x)):
                    r.checked += 1
                    if thr and not threatens_by_definition(h, a, rest):
                        r.fail(f"threat {members(a)}->{members(b)} after playing {x} in {_show(g)}")
                    if sup and not supports_by_definition(h, a, rest):
                        r.fail(f"support {members(a)}->{members(b)} after playing {x} in {_show(g)}")
            for x in bits(a):
                less = a & ~(1 << x)
                if not less:
                    continue
                r.checked += 1
                if thr and not threatens_by_definition(cut(g, x), less, b):
                    r.fail(f"threat {members(a)}->{members(b)} after cutting {x} in {_show(g)}")
                if sup and not supports_by_definition(short(g, x), less, b):
                    r.fail(f"support {members(a)}->{members(b)} after shorting {x} in {_show(g)}")
    return r


def _won_finals(m: MultiGame, verts: tuple[int, ...], p: Player) -> dict[frozenset, bool]:
    """P-win value of every final colouring in which P holds half the set."""
    out = {}
    for mine in combinations(verts, len(verts) // 2):
        other = tuple(v for v in verts if v not in mine)
        sh, ct = (mine, other) if p is Player.SHORT else (other, mine)
        out[frozenset(mine)] = m.final_winner(sum(1 << v for v in sh),
                                              sum(1 << v for v in ct)).won_by(p)
    return out


def threedom(max_n: int) -> SuiteResult:
    """Two dominating vertices of a 3-set force the third to dominate too."""
    r = SuiteResult("threedom")
    for g in positions(max_n):
        for trio in combinations(bits(g.nonterminals), 3):
            s = sum(1 << v for v in trio)
            m = MultiGame(g, s)
            dom = {v: dominates(g, v, s, m) for v in trio}
            for p in Player:
                r.checked += 1
                if sum(dom[v][p] for v in trio) == 2:
                    r.fail(f"{p} on {trio} in {_show(g)}")
    return r


def fourdom(max_n: int) -> SuiteResult:
    """Two dominating vertices of a 4-set whose joint occupation does not win
    give a second-player win."""
    r = SuiteResult("fourdom")
    for g in positions(max_n):
        for quad in combinations(bits(g.nonterminals), 4):
            s = sum(1 << v for v in quad)
            m = MultiGame(g, s)
            dom = {v: dominates(g, v, s, m) for v in quad}
            for p in Player:
                for a, b in combinations(quad, 2):
                    if not (dom[a][p] and dom[b][p]):
                        continue
                    mine = (1 << a) | (1 << b)
                    sh, ct = (mine, s & ~mine) if p is Player.SHORT else (s & ~mine, mine)
                    if m.final_winner(sh, ct).won_by(p):
                        continue
                    r.checked += 1
                    if not m.outcome(p.other).won_by(p):
                        r.fail(f"{p} with {a},{b} on {quad} in {_show(g)}")
    return r


# -- deadness ---------------------------------------------------------------------

def dead_ev(max_n: int) -> SuiteResult:
    """A vertex is dead exactly when all its edges are dead."""
    r = SuiteResult("dead_ev")
    for g in positions(max_n):
        for v in bits(g.nonterminals):
            r.checked += 1
            dv = is_dead_vertex_oracle(g, v)
            de = all(is_dead_edge_oracle(g, (v, u)) for u in bits(g.adj[v]))
            if dv != de:
                r.fail(f"vertex {v} in {_show(g)}")
    return r


# -- detectors against oracles ---------------------------------------------------------

def confirm(g: Graph, f: Fact) -> bool | None:
    """Oracle verdict on a fact about ``g``; None for kinds with no oracle check."""
    w = f.witnesses
    k = f.kind
    if k is FactKind.CAPTURED:
        return is_captured(g, w[0])
    if k is FactKind.LOST:
        return is_lost(g, w[0])
    if k is FactKind.DEAD_EDGE:
        return is_dead_edge_oracle(g, (w[0][0], w[1][0]))
    if k is FactKind.DEAD_VERTEX:
        return all(is_dead_vertex_oracle(g, v) for v in w[0])
    if k in (FactKind.CUT_WINS, FactKind.SHORT_WINS):
        p = Player.CUT if k is FactKind.CUT_WINS else Player.SHORT
        movers = list(Player) if f.mover is None else [f.mover]
        return all(solve_graph(g, m) is p for m in movers)
    if k in (FactKind.CUT_DOMINATES, FactKind.SHORT_DOMINATES):
        p = Player.CUT if k is FactKind.CUT_DOMINATES else Player.SHORT
        return dominates(g, w[0][0], w[1])[p]
    if k is FactKind.THREAT:
        return threatens_by_definition(g, w[0], w[1])
    if k is FactKind.SUPPORT:
        return supports_by_definition(g, w[0], w[1])
    return None


def soundness(max_n: int) -> SuiteResult:
    """Every fact from a one-shot analysis and from each fill-in step holds."""
    r = SuiteResult("soundness")
    for g in positions(max_n):
        checks = [(g, f) for f in analyse(g)]
        checks += [(st.graph, f) for st in fill_in(g).steps for f in st.facts]
        for h, f in checks:
            ok = confirm(h, f)
            if ok is None:
                continue
            r.checked += 1
            if not ok:
                r.fail(f"{f.line()} in {_show(h)}")
    return r


def preservation(max_n: int) -> SuiteResult:
    """The filled-in graph has the same winner as the original, both movers."""
    r = SuiteResult("fill_in_preservation")
    for g in positions(max_n):
        red = fill_in(g).reduced
        for p in Player:
            r.checked += 1
            if solve_graph(g, p) is not solve_graph(red, p):
                r.fail(f"mover {p} in {_show(g)}")
    return r


# name -> (suite, largest order it is run at by default)
SUITES: dict[str, tuple[Callable[[int], SuiteResult], int]] = {
    "commutation": (commutation, 6),
    "clique_lemma": (clique_lemma, 6),
    "fast_path": (fast_path, 6),
    "domts": (domts, 6),
    "robustness": (robustness, 6),
    "dead_ev": (dead_ev, 7),
    "soundness": (soundness, 7),
    "fill_in_preservation": (preservation, 7),
    "threedom": (threedom, 7),
    "fourdom": (fourdom, 7),
}


def run_all(max_n: int = 6, only: list[str] | None = None) -> list[SuiteResult]:
    """Run the suites at order ``max_n``, skipping those whose own cap is lower."""
    out = []
    for name, (suite, cap) in SUITES.items():
        if only and name not in only:
            continue
        if max_n > cap:
            out.append(SuiteResult(name, skipped=True))
        else:
            out.append(suite(max_n))
    return out
