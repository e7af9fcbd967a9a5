"""Annotate small Hex positions with dead, captured and lost cells."""
from shannon_game.hexboard import HexBoard, annotate, to_graph
from shannon_game.solver import Player, solve_graph

boards = {
    "centre stone": "hex 3\n...\n.B.\n...\n",
    "one stone each": "hex 3\n.B.\n...\nW..\n",
    "empty 3x3": "hex 3\n...\n...\n...\n",
}
for name, text in boards.items():
    b = HexBoard.parse(text)
    marked, report = annotate(b)
    g = to_graph(b)
    print(f"== {name}: Black to move wins? {solve_graph(g, Player.SHORT) is Player.SHORT}")
    print(marked.format(), end="")
    print(report.format() or "(no facts)\n")
