import itertools

import pytest
from hypothesis import given, settings

from conftest import graphs
from shannon_game.detectors import (
    Fact,
    FactKind,
    PreconditionFailed,
    dead_edges,
    dead_vertices,
    degree3_collapse,
    fill_in,
    find_or_captures,
    find_pairsets,
    mutual_pair_reduce,
    or_rule_capture,
    pairset_reduce,
    supports,
    supports_by_definition,
    terminal_cut_win,
    threat_by_triangles,
    threat_transfer,
    threatens,
    threatens_by_definition,
)
from shannon_game.gallery import (
    captured_by_links,
    domination,
    pairset_after_dead_edge,
    pairset_lost,
    surround,
    terminal_surrounded,
    transverse_vw,
)
from shannon_game.graph import (
    Graph,
    TerminalInSet,
    bits,
    connected_components,
    mask_of,
    neighbourhood,
    short,
    triangle_count,
    two_walks,
)
from shannon_game.solver import (
    Player,
    dominates,
    is_captured,
    is_dead_edge_oracle,
    is_dead_vertex_oracle,
    is_lost,
    solve_graph,
)
from shannon_game.verify import confirm, positions

SHORT, CUT = Player.SHORT, Player.CUT


def kinds(facts):
    return [(f.kind, f.vertices) for f in facts]


# -- threat and support -------------------------------------------------------------

def test_threatened_by_neighbourhood():
    g = domination().graph
    for v in bits(g.nonterminals):
        b = 1 << v
        a = neighbourhood(g, b) & g.nonterminals
        if neighbourhood(g, b) & g.terminals:
            continue
        assert threatens(g, a, b)


def test_degree_two_threatened_by_each_neighbour():
    g = Graph.from_edges(5, [(0, 2), (2, 3), (3, 4), (4, 1)], [0, 1])
    assert threatens(g, [2], [3]) and threatens(g, [4], [3])


def test_four_cycle_not_threatened_by_one_neighbour():
    c4 = Graph.from_edges(6, [(2, 3), (3, 4), (4, 5), (5, 2), (0, 2), (1, 4)], [0, 1])
    assert not threatens(c4, [3], [2])
    assert not threatens_by_definition(c4, [3], [2])


def test_threat_rejects_terminals():
    g = domination().graph
    with pytest.raises(TerminalInSet):
        threatens(g, [0], [2])
    with pytest.raises(TerminalInSet):
        supports(g, [2], [1])


def test_surround_support():
    s = surround()
    assert supports(s.graph, s.set("u"), s.set("v"))
    assert supports_by_definition(s.graph, s.set("u"), s.set("v"))


def test_degree_two_supported_by_double_two_walk():
    # v=2 between p=3, q=4; u=5 joined to both p and q
    g = Graph.from_edges(6, [(2, 3), (2, 4), (5, 3), (5, 4), (0, 3), (1, 4)], [0, 1])
    assert two_walks(g, 5, 2) == 2
    assert supports(g, [5], [2])


def test_supporting_set_exists_unless_vertex_separates_terminals():
    # cut vertices that only detach terminal-free (dead) parts can be supported
    checked = 0
    for g in positions(6):
        nt = g.nonterminals
        for v in bits(nt):
            rest = nt & ~(1 << v)
            if not rest:
                continue
            has = any(supports(g, a, 1 << v) for a in range(1, rest + 1) if not a & ~rest)
            comps = connected_components(g, g.alive & ~(1 << v))
            separates = not any(c & g.terminals == g.terminals for c in comps)
            assert has != separates
            checked += 1
    assert checked > 5000


def test_support_fast_path_on_adjacent_pair():
    # 4-cycle t1-a-t2-b: a supports its neighbour b only after shorting merges them
    g = Graph.from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)], [0, 1])
    assert supports(g, [2], [3]) == supports_by_definition(g, [2], [3])


# -- triangle test -----------------------------------------------------------------

def test_triangle_test_single_neighbour():
    for g in positions(6):
        for v in bits(g.nonterminals):
            d = g.degree(v)
            for u in bits(g.adj[v] & g.nonterminals):
                need = triangle_count(g, v) - (d - 1) * (d - 2) // 2
                assert threat_by_triangles(g, v, 1 << u) == (two_walks(g, u, v) == need)
                if threat_by_triangles(g, v, 1 << u):
                    assert threatens_by_definition(g, 1 << u, 1 << v)


def test_triangle_test_sound_for_sets():
    for g in positions(6):
        for v in bits(g.nonterminals):
            nb = g.adj[v] & g.nonterminals
            for k in range(1, nb.bit_count() + 1):
                for s in itertools.combinations(bits(nb), k):
                    s = mask_of(s)
                    if threat_by_triangles(g, v, s):
                        assert threatens_by_definition(g, s, 1 << v)


def test_triangle_free_degree_two():
    g = Graph.from_edges(4, [(0, 2), (2, 3), (3, 1)], [0, 1])
    assert threat_by_triangles(g, 2, [3])


def test_hex_pattern_mutual_threat():
    from shannon_game.gallery import HEX_THREAT_CELLS, HEX_THREAT_PAIR
    from shannon_game.hexboard import HexBoard, to_graph
    g = to_graph(HexBoard.parse(HEX_THREAT_PAIR))
    u, v = HEX_THREAT_CELLS
    assert threat_by_triangles(g, u, 1 << v)
    assert threat_by_triangles(g, v, 1 << u)
    assert is_lost(g, [u, v])


# -- threat transfer ---------------------------------------------------------------

def test_threat_transfer_examples():
    # path t1-2-3-4-5-t2: {3} threatens {4}, transfer gives {2} threatening {3,4}
    path = Graph.from_edges(6, [(0, 2), (2, 3), (3, 4), (4, 5), (5, 1)], [0, 1])
    # star: centre 2, leaves 3, 4, 5 with 3 on t1 and 5 on t2
    star = Graph.from_edges(7, [(2, 3), (2, 4), (2, 5), (3, 0), (5, 1), (4, 6), (6, 1)], [0, 1])
    d = domination()
    cases = [(path, [3], [4]), (star, [2], [4]), (d.graph, d.set("b"), d.set("a"))]
    for g, a, b in cases:
        assert threatens(g, a, b)
        x, y = threat_transfer(g, a, b)
        assert threatens_by_definition(g, x, y)


def test_threat_transfer_precondition():
    g = Graph.from_edges(6, [(2, 3), (3, 4), (4, 5), (5, 2), (0, 2), (1, 4)], [0, 1])
    with pytest.raises(PreconditionFailed):
        threat_transfer(g, [3], [2])


# -- pairs, degree 3, pair-sets, OR-rule -----------------------------------------------------

def test_mutual_pairs():
    lost = Graph.from_edges(4, [(0, 2), (2, 3), (3, 1)], [0, 1])
    assert kinds(mutual_pair_reduce(lost)) == [(FactKind.LOST, (2, 3))]
    cap = Graph.from_edges(6, [(0, 4), (5, 1), (2, 4), (2, 5), (3, 4), (3, 5)], [0, 1])
    assert kinds(mutual_pair_reduce(cap)) == [(FactKind.CAPTURED, (2, 3))]
    # one of the two degree-2 vertices is a terminal
    t = Graph.from_edges(5, [(0, 3), (0, 4), (2, 3), (2, 4), (4, 1)], [0, 1])
    assert not [f for f in mutual_pair_reduce(t) if 0 in f.vertices]


def test_degree3_star():
    # centre 2, leaves 3, 4, 5; each leaf reaches a terminal through its own vertex
    es = [(2, 3), (2, 4), (2, 5), (3, 6), (4, 7), (5, 8), (6, 0), (7, 1), (8, 1)]
    g = Graph.from_edges(9, es, [0, 1])
    facts = degree3_collapse(g)
    assert (FactKind.LOST, (2, 3, 4, 5)) in kinds(facts)
    assert is_lost(g, [2, 3, 4, 5])
    h = Graph.from_edges(6, [(2, 0), (2, 3), (2, 4), (3, 1), (4, 5), (5, 1)], [0, 1])
    assert not [f for f in degree3_collapse(h) if f.kind is FactKind.LOST]


def test_degree3_collapse_sound():
    for g in positions(6):
        for f in degree3_collapse(g):
            assert confirm(g, f)


def test_pairset_lost_example():
    p = pairset_lost()
    f = pairset_reduce(p.graph, [(p["a"], p["c"]), (p["b"], p["d"])])
    assert f is not None and f.kind is FactKind.LOST
    assert f.vertices == tuple(bits(p.set("a b c d")))
    assert is_lost(p.graph, p.set("a b c d"))
    assert any(x.vertices == f.vertices for x in find_pairsets(p.graph))


def test_pairset_needs_the_dead_edge_gone():
    p = pairset_after_dead_edge()
    g = p.graph
    c, d = p["c"], p["d"]
    dead = {(f.witnesses[0][0], f.witnesses[1][0]): f.tag for f in dead_edges(g)}
    assert dead[(min(c, d), max(c, d))].startswith("vwdead")
    assert is_dead_edge_oracle(g, (c, d))
    assert threatens(g, p.set("a"), p.set("c"))
    h = g.remove_edge(c, d)
    assert threatens(h, p.set("b"), p.set("d"))
    assert not threatens(g, p.set("b"), p.set("d"))
    assert threatens(h, p.set("c d"), p.set("a b"))
    f = pairset_reduce(h, [(p["a"], c), (p["b"], d)])
    assert f is not None and f.kind is FactKind.LOST
    s = p.set("a b c d")
    assert is_lost(g, s) and is_lost(h, s)
    # none of the simpler certificates reach S
    assert not [x for x in mutual_pair_reduce(g) if mask_of(x.vertices) & s]


def test_pairset_single_pair():
    g = Graph.from_edges(4, [(0, 2), (2, 3), (3, 1)], [0, 1])
    f = pairset_reduce(g, [(2, 3)])
    assert f.kind is FactKind.LOST


def test_pairset_preconditions():
    g = Graph.from_edges(4, [(0, 2), (2, 3), (3, 1)], [0, 1])
    with pytest.raises(PreconditionFailed):
        pairset_reduce(g, [(2, 3), (3, 2)])
    with pytest.raises(PreconditionFailed):
        pairset_reduce(g, [])


def test_or_rule_parallel_connectors():
    # 2 and 3 each joined to both terminal neighbours 4, 5
    g = Graph.from_edges(6, [(0, 4), (5, 1), (2, 4), (2, 5), (3, 4), (3, 5)], [0, 1])
    assert or_rule_capture(g, [2, 3], [[2], [3]])
    assert not or_rule_capture(g, [2, 3], [[2, 3], [3]])


def test_or_rule_on_link_example():
    c = captured_by_links()
    g = c.graph
    s = c.set("e f g h")
    assert or_rule_capture(g, s, [c.set("e"), c.set("f g h")])
    assert is_captured(g, s)
    assert [f for f in find_or_captures(g) if f.vertices == tuple(sorted(bits(s)))]


def test_or_rule_subset_outside():
    c = captured_by_links()
    with pytest.raises(PreconditionFailed):
        or_rule_capture(c.graph, c.set("e f"), [c.set("g")])


def test_link_example_caption_chain():
    c = captured_by_links()
    g = c.graph
    e, f, gg, h = (c[x] for x in "efgh")
    for x in (f, gg, h):
        assert supports(g, 1 << e, 1 << x)
    gf = short(g, f)
    assert supports(gf, 1 << gg, 1 << h) and supports(gf, 1 << h, 1 << gg)
    assert dominates(g, f, c.set("f g h"))[SHORT]
    assert supports(g, c.set("f g h"), 1 << e)
    s = c.set("e f g h")
    assert not [x for x in mutual_pair_reduce(g) if mask_of(x.vertices) & s]
    # g-R2 plays no part, yet it is not dead; without it support pairs suffice
    assert not is_dead_edge_oracle(g, (gg, c["R2"]))
    cut_gt = g.remove_edge(gg, c["R2"])
    assert [x for x in mutual_pair_reduce(cut_gt) if x.kind is FactKind.CAPTURED
            and mask_of(x.vertices) == c.set("g h")]


# -- dead edges and vertices --------------------------------------------------------

def _dead_edge_tags(g):
    return {(f.witnesses[0][0], f.witnesses[1][0]): f.tag for f in dead_edges(g)}


def test_dead_edge_examples():
    d = domination()
    a, c = sorted((d["a"], d["c"]))
    tags = _dead_edge_tags(d.graph)
    assert (a, c) in tags
    tv = transverse_vw()
    v, w = sorted((tv["v"], tv["w"]))
    assert _dead_edge_tags(tv.graph)[(v, w)] == "vwdead_cor2"
    tri = Graph.from_edges(5, [(0, 2), (0, 3), (2, 3), (2, 4), (3, 4), (4, 1)], [0, 1])
    assert _dead_edge_tags(tri)[(2, 3)] == "dead_tedge"


def test_dead_vertex_examples():
    pend = Graph.from_edges(5, [(0, 2), (2, 1), (2, 3), (3, 4)], [0, 1])
    dv = {f.witnesses[0][0] for f in dead_vertices(pend)}
    assert {3, 4} <= dv
    t = terminal_surrounded()
    dv = {f.witnesses[0][0]: f.tag for f in dead_vertices(t.graph)}
    assert dv[t["v"]] == "dead_tneighbour"
    assert short(t.graph, t["v"]) != t.graph and is_dead_vertex_oracle(t.graph, t["v"])
    path = Graph.from_edges(5, [(0, 2), (2, 3), (3, 4), (4, 1)], [0, 1])
    assert 3 not in {f.witnesses[0][0] for f in dead_vertices(path)}


def test_hanging_subgraph_removed():
    # clique {2, 3} cuts off the triangle 4, 5, 6
    es = [(0, 2), (2, 3), (3, 1), (2, 4), (3, 4), (4, 5), (5, 6), (4, 6)]
    g = Graph.from_edges(7, es, [0, 1])
    red = fill_in(g).reduced
    assert not red.alive & mask_of([4, 5, 6])


# -- terminal cut wins --------------------------------------------------------------

def test_terminal_cut_win_degree_two_neighbours():
    g = Graph.from_edges(6, [(0, 2), (0, 3), (2, 4), (3, 5), (4, 1), (5, 1)], [0, 1])
    f = terminal_cut_win(g)
    assert f is not None and f.mover is None
    assert solve_graph(g, SHORT) is CUT and solve_graph(g, CUT) is CUT


def test_terminal_cut_win_sound_small():
    for g in positions(6):
        f = terminal_cut_win(g)
        if f is None:
            continue
        if f.mover is CUT:
            assert solve_graph(g, CUT) is CUT
        else:
            assert solve_graph(g, SHORT) is CUT


def test_terminal_cut_win_adjacent_terminals():
    g = Graph.from_edges(3, [(0, 1), (1, 2)], [0, 1])
    assert terminal_cut_win(g) is None


# -- fill-in ----------------------------------------------------------------------------

def test_fill_in_exposes_lost_pairs():
    tv = transverse_vw()
    rep = fill_in(tv.graph)
    first = rep.steps[0].facts
    assert first[0].kind is FactKind.DEAD_EDGE and first[0].vertices == tuple(sorted((tv["v"], tv["w"])))
    h = tv.graph.remove_edge(tv["v"], tv["w"])
    lost = {f.vertices for f in mutual_pair_reduce(h) if f.kind is FactKind.LOST}
    av, vb = tuple(sorted((tv["a"], tv["v"]))), tuple(sorted((tv["v"], tv["b"])))
    assert av in lost and vb in lost
    assert is_lost(h, av) and is_lost(h, vb)
    assert not is_lost(tv.graph, av)


def test_fill_in_irreducible():
    # smallest kind of position where no detector fires
    es = [(0, 2), (0, 3), (1, 4), (1, 5), (2, 4), (2, 6), (3, 5), (3, 6), (4, 6), (5, 6)]
    g = Graph.from_edges(7, es, [0, 1])
    rep = fill_in(g)
    assert rep.facts == [] and rep.reduced == g


def test_report_format_sorted_and_stable():
    tv = transverse_vw()
    rep = fill_in(tv.graph)
    lines = rep.lines()
    assert lines == sorted(lines)
    assert rep.format() == fill_in(tv.graph).format()
    for ln in lines:
        kind, tag, *_ = ln.split()
        assert kind in FactKind.__members__


def test_fact_line_format():
    f = Fact(FactKind.CUT_WINS, "terminal_cut_win_cor", ((0,), (3,), ()), CUT)
    assert f.line() == "CUT_WINS terminal_cut_win_cor 0 3 - first=cut"


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=3, max_n=8))
def test_fill_in_sound_random(g):
    rep = fill_in(g)
    for p in Player:
        assert solve_graph(rep.reduced, p) is solve_graph(g, p)
    if g.nonterminals.bit_count() <= 6:
        for st in rep.steps:
            for f in st.facts:
                assert confirm(st.graph, f) is not False


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=3, max_n=7))
def test_fast_paths_random(g):
    nt = list(bits(g.nonterminals))
    for a, b in itertools.permutations(nt, 2):
        assert threatens(g, 1 << a, 1 << b) == threatens_by_definition(g, 1 << a, 1 << b)
        assert supports(g, 1 << a, 1 << b) == supports_by_definition(g, 1 << a, 1 << b)
