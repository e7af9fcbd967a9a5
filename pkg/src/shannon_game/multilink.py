"""Strong and weak multi-links and the OR / AND composition rules."""
from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass

from .detectors import PreconditionFailed
from .graph import Graph, GraphError, VertexSet, bits, is_clique, mask_of, members, short
from .solver import MultiGame, Player

MAX_CARRIER = 12


class Strength(enum.Enum):
    STRONG = "strong"
    WEAK = "weak"


@dataclass(frozen=True)
class MultiLink:
    carrier: int
    terminals: int
    strength: Strength
    pivots: int = 0

    def __post_init__(self):
        if self.carrier & self.terminals:
            raise GraphError("carrier and link terminals must be disjoint")
        if (self.strength is Strength.WEAK) != bool(self.pivots):
            raise GraphError("weak links need pivots, strong links have none")
        if self.pivots & ~self.carrier:
            raise GraphError("pivots must lie in the carrier")

    @classmethod
    def of(cls, carrier: VertexSet, terminals: VertexSet, strength: Strength,
           pivots: VertexSet = 0) -> "MultiLink":
        return cls(mask_of(carrier), mask_of(terminals), strength, mask_of(pivots))

    def __str__(self) -> str:
        s = f"{self.strength.value} {list(members(self.carrier))} -> {list(members(self.terminals))}"
        if self.pivots:
            s += f" pivots {list(members(self.pivots))}"
        return s


def _clique_rows(t: int) -> tuple[int, ...]:
    return tuple(t & ~(1 << v) for v in bits(t))


def link_game(g: Graph, carrier: VertexSet, terminals: VertexSet) -> tuple[bool, bool]:
    """(Short wins moving first, Short wins moving second) at making
    ``terminals`` a clique with play restricted to ``carrier``."""
    carrier, terminals = mask_of(carrier), mask_of(terminals)
    if carrier.bit_count() > MAX_CARRIER:
        raise GraphError(f"carrier larger than {MAX_CARRIER} vertices")
    if not carrier:
        ok = is_clique(g, terminals)
        return ok, ok
    m = MultiGame(g, carrier, short_target=_clique_rows(terminals), link_terminals=terminals)
    return (m.can_force(m.board, Player.SHORT, Player.SHORT),
            m.can_force(m.board, Player.CUT, Player.SHORT))


def find_pivots(g: Graph, carrier: VertexSet, terminals: VertexSet) -> int:
    carrier = mask_of(carrier)
    out = 0
    for p in bits(carrier):
        first, second = link_game(short(g, p), carrier & ~(1 << p), terminals)
        if second:
            out |= 1 << p
    return out


def classify_link(g: Graph, carrier: VertexSet, terminals: VertexSet) -> MultiLink | None:
    """The link (with all pivots) that the carrier actually forms, if any."""
    carrier, terminals = mask_of(carrier), mask_of(terminals)
    first, second = link_game(g, carrier, terminals)
    if second:
        return MultiLink(carrier, terminals, Strength.STRONG)
    if first:
        return MultiLink(carrier, terminals, Strength.WEAK, find_pivots(g, carrier, terminals))
    return None


def verify_link(g: Graph, link: MultiLink, *, exact: bool = True) -> bool:
    """Play the restricted game and check the claimed strength.

    A strong link must win moving first and second; a weak one must win
    moving first, lose moving second, and become strong after shorting any
    of its pivots.  With ``exact=False`` a weak claim is also accepted when
    the link is in fact strong.
    """
    first, second = link_game(g, link.carrier, link.terminals)
    if link.strength is Strength.STRONG:
        return first and second
    if not first or (second and exact):
        return False
    rest = link.carrier
    for p in bits(link.pivots):
        if not link_game(short(g, p), rest & ~(1 << p), link.terminals)[1]:
            return False
    return True


def or_rule(links: Sequence[MultiLink]) -> MultiLink:
    """Weak links between the same terminals with no common carrier vertex
    combine into a strong link on the union of the carriers."""
    if not links:
        raise PreconditionFailed("OR-rule needs at least one link")
    t = links[0].terminals
    if any(l.terminals != t for l in links):
        raise PreconditionFailed("OR-rule links must share their terminals")
    common, union = links[0].carrier, 0
    for l in links:
        common &= l.carrier
        union |= l.carrier
    if common:
        raise PreconditionFailed(f"carriers intersect in {list(members(common))}")
    return MultiLink(union, t, Strength.STRONG)


def and_rule(l1: MultiLink, l2: MultiLink) -> MultiLink:
    """Two strong links with shared terminals and disjoint carriers give a
    weak link over the symmetric difference of their terminals, pivoted by
    the shared terminals (which join the carrier)."""
    if l1.strength is not Strength.STRONG or l2.strength is not Strength.STRONG:
        raise PreconditionFailed("AND-rule needs two strong links")
    shared = l1.terminals & l2.terminals
    if not shared:
        raise PreconditionFailed("AND-rule links must share a terminal")
    if l1.carrier & l2.carrier:
        raise PreconditionFailed("AND-rule carriers must be disjoint")
    terminals = l1.terminals ^ l2.terminals
    carrier = l1.carrier | l2.carrier | shared
    if carrier & terminals:
        raise PreconditionFailed("a carrier overlaps the combined terminals")
    return MultiLink(carrier, terminals, Strength.WEAK, shared)
