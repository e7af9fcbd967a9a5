"""Small named positions used by the tests, the demos and ``verify``.

Each entry is a graph with readable vertex names.  ``Named.idx`` maps names
to indices and ``Named.set`` builds vertex masks from space-separated names.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, mask_of


@dataclass(frozen=True)
class Named:
    graph: Graph
    names: tuple[str, ...]

    @property
    def idx(self) -> dict[str, int]:
        return {k: i for i, k in enumerate(self.names)}

    def set(self, spec: str) -> int:
        idx = self.idx
        return mask_of(idx[k] for k in spec.split())

    def __getitem__(self, name: str) -> int:
        return self.names.index(name)


def _build(names: str, edges: str, terminals: str = "t1 t2") -> Named:
    ns = tuple(names.split())
    idx = {k: i for i, k in enumerate(ns)}
    es = [tuple(idx[x] for x in e.split("-")) for e in edges.split()]
    return Named(Graph.from_edges(len(ns), es, [idx[t] for t in terminals.split()]), ns)


def capture_and_loss() -> Named:
    """{b,c} captured while {a,b,c,d} is lost."""
    return _build("t1 t2 a b c d", "t1-a a-b a-c b-d c-d d-t2")


def domination() -> Named:
    """b cut-dominates {a,b} but a does not; ac is dead since c surrounds a."""
    return _build("t1 t2 a b c x y", "a-b a-c a-y b-c b-x c-y x-t1 y-t2")


def lost_pair() -> Named:
    """Two adjacent degree-2 vertices p, q: lost."""
    return _build("t1 t2 p q", "t1-p p-q q-t2")


def captured_pair() -> Named:
    """Two degree-2 vertices p, q with the same neighbours: captured."""
    return _build("t1 t2 x y p q", "t1-x y-t2 p-x p-y q-x q-y")


def surround() -> Named:
    """w surrounds v; u supports v without surrounding it."""
    return _build("t1 t2 v w u p q", "v-p v-q v-w w-p w-q u-p u-q p-t1 q-t2")


def terminal_surrounded() -> Named:
    """v is surrounded by t1 although shorting v differs from cutting it."""
    return _build("t1 t2 v p q x", "t1-p t1-q v-p v-q p-x x-t2 q-t2")


def transverse_vw() -> Named:
    """vw is dead; once it is gone, {a,v} and {v,b} are lost."""
    return _build("t1 t2 w a v b", "t1-w w-t2 t1-a a-v v-b b-t2 w-v")


def pairset_lost() -> Named:
    """{a,b,c,d} lost via the pairs (a,c), (b,d)."""
    return _build("t1 t2 a b c d x", "t1-b t1-x t2-c t2-d t2-x a-b a-c a-x b-d")


def pairset_after_dead_edge() -> Named:
    """{a,b,c,d} lost once the dead edge cd is deleted; Cut wins as second player."""
    return _build("t1 t2 a b c d x",
                  "t1-a t1-d t1-x t2-b a-c a-d a-x b-c b-d c-d")


def captured_by_links() -> Named:
    """{e,f,g,h} captured, with multi-terminals L1 L2 (left) and R1 R2 (right).

    The Shannon terminals are L1 and R1.  Edge g-R2 is not dead, but it
    plays no part in the result.
    """
    return _build("L1 L2 R1 R2 e f g h",
                  "h-L1 h-L2 h-f g-L1 g-L2 g-f e-L1 e-L2 e-R1 e-R2 f-R1 f-R2 R1-R2 "
                  "e-f e-g e-h g-R2",
                  terminals="L1 R1")


ALL = {
    "capture_and_loss": capture_and_loss,
    "domination": domination,
    "lost_pair": lost_pair,
    "captured_pair": captured_pair,
    "surround": surround,
    "terminal_surrounded": terminal_surrounded,
    "transverse_vw": transverse_vw,
    "pairset_lost": pairset_lost,
    "pairset_after_dead_edge": pairset_after_dead_edge,
    "captured_by_links": captured_by_links,
}

# Hex: one Black stone in the middle of a 3x3 board; cells (1,2) and (2,2)
# threaten each other.
HEX_THREAT_PAIR = "hex 3\n...\n.B.\n...\n"
HEX_THREAT_CELLS = (5, 8)
