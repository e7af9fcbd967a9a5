"""Run the detectors on a position and watch fill-in simplify it."""
from shannon_game.detectors import fill_in
from shannon_game.gallery import pairset_after_dead_edge, transverse_vw
from shannon_game.graph import format_graph_text
from shannon_game.solver import Player, solve_graph

for name, build in (("transverse edge", transverse_vw),
                    ("pair-set after a dead edge", pairset_after_dead_edge)):
    named = build()
    g = named.graph
    print(f"== {name}: vertices {named.idx}")
    report = fill_in(g)
    for i, step in enumerate(report.steps, 1):
        print(f"step {i}:", "; ".join(f.line() for f in step.facts))
    print("reduced graph:")
    print(format_graph_text(report.reduced), end="")
    for p in Player:
        assert solve_graph(report.reduced, p) is solve_graph(g, p)
    print("win values unchanged for both movers\n")
