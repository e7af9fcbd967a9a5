import io

import networkx as nx
import pytest

from nauty_gen import connected_graph6
from shannon_game.census import (
    CensusRow,
    canonical_form,
    census_graphs,
    classify,
    enumerate_connected,
    run_census,
)
from shannon_game.graph import Graph, MalformedGraph6, encode_graph6

TABLE = {
    1: (1, 0, 1, 0, 0),
    2: (1, 0, 0, 1, 0),
    3: (2, 0, 0, 1, 0),
    4: (6, 1, 1, 3, 1),
    5: (21, 4, 2, 10, 2),
    6: (112, 24, 9, 52, 7),
    7: (853, 191, 46, 363, 34),
}


def k(n):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def test_classify_small():
    assert classify(k(2)) == (False, False, True, False)
    assert classify(k(3)) == (False, False, False, False)
    c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    assert classify(c5) == (True, True, True, True)
    # a path has simplicial ends, and the end edge is transverse
    p4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert classify(p4) == (False, False, True, False)


@pytest.mark.parametrize("n", range(1, 8))
def test_rows_from_builtin_generator(n):
    assert census_graphs(enumerate_connected(n), n).as_tuple()[1:] == TABLE[n]


@pytest.mark.parametrize("n", range(1, 8))
def test_builtin_generator_matches_nauty(n):
    ours = sorted(encode_graph6(g) for g in enumerate_connected(n))
    assert len(ours) == len(connected_graph6(n))
    assert run_census(ours, n) == run_census(connected_graph6(n), n)


def test_totals_match_networkx_atlas():
    # the atlas lists every graph on up to 7 vertices
    counts = {}
    for g in nx.graph_atlas_g()[1:]:
        if nx.is_connected(g):
            counts[g.number_of_nodes()] = counts.get(g.number_of_nodes(), 0) + 1
    assert {n: TABLE[n][0] for n in TABLE} == counts


def test_canonical_form_invariant_under_relabelling(rng):
    for g in enumerate_connected(6):
        perm = list(range(6))
        rng.shuffle(perm)
        h = Graph.from_edges(6, [(perm[u], perm[v]) for u, v in g.edges()])
        assert canonical_form(h) == canonical_form(g)


def test_header_and_blank_lines():
    lines = [">>graph6<<" + connected_graph6(4)[0] + "\n", "\n"] + connected_graph6(4)[1:]
    assert run_census(lines, 4).as_tuple() == (4,) + TABLE[4]
    assert run_census(io.BytesIO("\n".join(connected_graph6(3)).encode()), 3).total == 2


def test_order_mismatch_reports_offset():
    recs = connected_graph6(4) + connected_graph6(3)[:1]
    with pytest.raises(MalformedGraph6, match="record 6"):
        run_census(recs, 4)


def test_merge_and_workers():
    recs = connected_graph6(7)
    a = run_census(recs[:400], 7)
    b = run_census(recs[400:], 7)
    assert a.merge(b) == run_census(recs, 7)
    assert run_census(recs, 7, workers=2, chunk=100) == a.merge(b)
    with pytest.raises(ValueError):
        a.merge(CensusRow(6))


def test_tsv():
    assert run_census(connected_graph6(5), 5).tsv() == "5\t21\t4\t2\t10\t2"


def test_both_bounded_by_its_parts():
    for n in range(1, 8):
        r = run_census(connected_graph6(n), n)
        assert r.both <= min(r.transverse_free, r.two_triangle_free)
