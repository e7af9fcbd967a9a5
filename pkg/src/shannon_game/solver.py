"""Exact solvers: the Shannon game, multi-Shannon games, and colouring oracles.

Everything here is exponential and meant as ground truth for small
graphs.  The polynomial detectors in :mod:`shannon_game.detectors` are
checked against these.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product

from .graph import (
    Graph,
    GraphError,
    TerminalInSet,
    VertexSet,
    bits,
    component_of,
    cut,
    cut_set,
    mask_of,
    neighbourhood,
    short,
    short_set,
)


class Player(enum.IntEnum):
    CUT = 0
    SHORT = 1

    @property
    def other(self) -> "Player":
        return Player(1 - self)

    def __str__(self) -> str:
        return self.name.lower()


class MultiOutcome(enum.Enum):
    SHORT_WIN = "short"
    CUT_WIN = "cut"
    DRAW = "draw"
    BOTH_WIN = "both"

    def won_by(self, p: Player) -> bool:
        if self is MultiOutcome.BOTH_WIN:
            return True
        return self is (MultiOutcome.SHORT_WIN if p is Player.SHORT else MultiOutcome.CUT_WIN)


def play(g: Graph, v: int, p: Player) -> Graph:
    return short(g, v) if p is Player.SHORT else cut(g, v)


# -- Shannon game ----------------------------------------------------------------

@dataclass(frozen=True)
class Position:
    graph: Graph
    to_move: Player

    def __post_init__(self):
        ts = self.graph.terminal_list()
        if len(ts) != 2:
            raise GraphError(f"a Shannon position needs exactly 2 terminals, got {len(ts)}")


class ShannonSolver:
    """Minimax over reduced graphs with a transposition table.

    The table is keyed on the full graph value (alive set, adjacency rows,
    terminals) plus the mover, so equal keys are equal positions.
    """

    def __init__(self):
        self.memo: dict[tuple[Graph, Player], Player] = {}

    def winner(self, g: Graph, to_move: Player) -> Player:
        t1, t2 = g.terminal_list()
        return self._winner(g, to_move, t1, t2)

    def _winner(self, g: Graph, p: Player, t1: int, t2: int) -> Player:
        if g.adj[t1] >> t2 & 1:
            return Player.SHORT
        comp = component_of(g, t1)
        if not comp >> t2 & 1:
            return Player.CUT
        if comp != g.alive:
            # vertices off the terminals' component never matter
            g = g.induced(comp)
        key = (g, p)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        res = p.other
        for v in self.move_order(g, t1, t2):
            if self._winner(play(g, v, p), p.other, t1, t2) is p:
                res = p
                break
        self.memo[key] = res
        return res

    @staticmethod
    def move_order(g: Graph, t1: int, t2: int) -> list[int]:
        near = (g.adj[t1] | g.adj[t2]) & g.nonterminals
        return list(bits(near)) + list(bits(g.nonterminals & ~near))

    def winning_move(self, g: Graph, p: Player) -> int | None:
        """First winning move for ``p`` in the deterministic move order."""
        t1, t2 = g.terminal_list()
        if g.adj[t1] >> t2 & 1 or not component_of(g, t1) >> t2 & 1:
            return None
        for v in self.move_order(g, t1, t2):
            if self._winner(play(g, v, p), p.other, t1, t2) is p:
                return v
        return None


def solve(p: Position, solver: ShannonSolver | None = None) -> Player:
    """Player holding a winning strategy from position ``p``."""
    solver = solver or ShannonSolver()
    return solver.winner(p.graph, p.to_move)


def solve_graph(g: Graph, to_move: Player) -> Player:
    return solve(Position(g, to_move))


# -- multi-Shannon game -------------------------------------------------------------

def _terminal_rows(g: Graph, t: int) -> tuple[int, ...]:
    return tuple(g.adj[v] & t for v in bits(t))


class MultiGame:
    """Local game on ``area`` with the area's neighbourhood as terminals.

    Play happens on the subgraph induced by area plus neighbourhood.  Short
    aims for the terminal adjacency of ``short_set(g, area)``, Cut for that
    of ``cut_set(g, area)``.
    """

    def __init__(self, graph: Graph, area: VertexSet, *, short_target=None,
                 link_terminals: VertexSet | None = None):
        area = mask_of(area)
        if not area:
            raise GraphError("multi-Shannon area must be nonempty")
        if area & graph.terminals:
            raise TerminalInSet("multi-Shannon area must be terminal-free")
        if area & ~graph.alive:
            raise GraphError("multi-Shannon area must be alive")
        self.graph = graph
        self.area = area
        t = neighbourhood(graph, area) if link_terminals is None else mask_of(link_terminals)
        self.link_terminals = t
        board = graph.induced(area | t).with_terminals(t)
        self.board = board
        self.short_target = (_terminal_rows(short_set(board, area), t)
                             if short_target is None else short_target)
        self.cut_target = _terminal_rows(board, t)
        self._memo = {}

    @property
    def targets_coincide(self) -> bool:
        return self.short_target == self.cut_target

    def can_force(self, g: Graph, to_move: Player, goal: Player) -> bool:
        """Can ``goal`` force its target from board state ``g``?"""
        cur = _terminal_rows(g, self.link_terminals)
        if goal is Player.SHORT:
            if cur == self.short_target:
                return True
        elif cur != self.cut_target:
            # edges among terminals are never removed
            return False
        rest = g.alive & self.area
        if not rest:
            return goal is Player.CUT
        key = (g, to_move, goal)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if to_move is goal:
            res = any(self.can_force(play(g, v, to_move), to_move.other, goal) for v in bits(rest))
        else:
            res = all(self.can_force(play(g, v, to_move), to_move.other, goal) for v in bits(rest))
        self._memo[key] = res
        return res

    def outcome(self, first: Player, g: Graph | None = None) -> MultiOutcome:
        g = self.board if g is None else g
        if self.targets_coincide:
            return MultiOutcome.BOTH_WIN
        if self.can_force(g, first, Player.SHORT):
            return MultiOutcome.SHORT_WIN
        if self.can_force(g, first, Player.CUT):
            return MultiOutcome.CUT_WIN
        return MultiOutcome.DRAW

    def outcome_after(self, v: int, p: Player) -> MultiOutcome:
        """Outcome when ``p`` opens at ``v`` and the opponent continues."""
        if not self.area >> v & 1:
            raise GraphError(f"{v} is not in the playing area")
        return self.outcome(p.other, play(self.board, v, p))

    def final_winner(self, shorted: VertexSet, cut_: VertexSet) -> MultiOutcome:
        """Outcome of a complete colouring of the area (turn order ignored)."""
        shorted, cut_ = mask_of(shorted), mask_of(cut_)
        if shorted | cut_ != self.area or shorted & cut_:
            raise GraphError("colouring must partition the area")
        if self.targets_coincide:
            return MultiOutcome.BOTH_WIN
        cur = _terminal_rows(short_set(cut_set(self.board, cut_), shorted), self.link_terminals)
        if cur == self.short_target:
            return MultiOutcome.SHORT_WIN
        if cur == self.cut_target:
            return MultiOutcome.CUT_WIN
        return MultiOutcome.DRAW


def solve_multi(m: MultiGame, first: Player) -> MultiOutcome:
    return m.outcome(first)


def is_captured(g: Graph, s: VertexSet) -> bool:
    """Short has a second-player win of the multi-Shannon game on ``s``."""
    return MultiGame(g, s).outcome(Player.CUT).won_by(Player.SHORT)


def is_lost(g: Graph, s: VertexSet) -> bool:
    """Cut has a second-player win of the multi-Shannon game on ``s``."""
    return MultiGame(g, s).outcome(Player.SHORT).won_by(Player.CUT)


def dominates(g: Graph, v: int, s: VertexSet, m: MultiGame | None = None) -> dict[Player, bool]:
    """For each player P: does opening at ``v`` win the game on ``s`` for P?"""
    m = m or MultiGame(g, s)
    return {p: m.outcome_after(v, p).won_by(p) for p in Player}


# -- complete colourings -----------------------------------------------------------

def _black_connected(g: Graph, black: int, t1: int, t2: int) -> bool:
    within = black | 1 << t1 | 1 << t2
    return bool(component_of(g, t1, within) >> t2 & 1)


def winner_of_colouring(g: Graph, colouring: dict[int, Player]) -> Player:
    """Winner once every listed vertex is shorted or cut as coloured."""
    t1, t2 = g.terminal_list()
    shorted = mask_of(v for v, p in colouring.items() if p is Player.SHORT)
    cut_ = mask_of(v for v, p in colouring.items() if p is Player.CUT)
    h = short_set(cut_set(g, cut_), shorted)
    return Player.SHORT if h.has_edge(t1, t2) else Player.CUT


ORACLE_LIMIT = 20


def _colourings(g: Graph, exclude: int = 0):
    free = list(bits(g.nonterminals & ~exclude))
    if len(free) > ORACLE_LIMIT:
        raise GraphError(f"{len(free)} uncoloured vertices exceed the oracle limit {ORACLE_LIMIT}")
    for choice in product((0, 1), repeat=len(free)):
        yield sum(1 << v for v, c in zip(free, choice) if c)


def is_dead_edge_oracle(g: Graph, e: tuple[int, int]) -> bool:
    """Deleting ``e`` never changes the winner of any complete colouring.

    A non-edge is tested in the graph with the edge added.
    """
    u, v = e
    if not g.has_edge(u, v):
        g = g.add_edge(u, v)
    h = g.remove_edge(u, v)
    t1, t2 = g.terminal_list()
    # colouring winner = black path between terminals, with shorted = black
    return all(_black_connected(g, b, t1, t2) == _black_connected(h, b, t1, t2)
               for b in _colourings(g))


def is_dead_vertex_oracle(g: Graph, v: int) -> bool:
    if g.terminals >> v & 1:
        raise TerminalInSet("terminals are never dead")
    t1, t2 = g.terminal_list()
    bit = 1 << v
    return all(_black_connected(g, b | bit, t1, t2) == _black_connected(g, b, t1, t2)
               for b in _colourings(g, exclude=bit))
