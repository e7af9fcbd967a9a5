"""Solve a few small Shannon games and multi-Shannon games."""
from shannon_game.gallery import capture_and_loss
from shannon_game.graph import Graph
from shannon_game.solver import MultiGame, Player, ShannonSolver

solver = ShannonSolver()

# Two parallel paths between the terminals: Short wins whoever moves first.
square = Graph.from_edges(4, [(0, 2), (2, 1), (0, 3), (3, 1)], [0, 1])
for mover in Player:
    print(f"square, {mover} to move: {solver.winner(square, mover)} wins")

# A single path: whoever moves first takes the middle vertex.
path = Graph.from_edges(3, [(0, 2), (2, 1)], [0, 1])
print("path, short to move, winning move:", solver.winning_move(path, Player.SHORT))

# Capture and loss are properties of sets, not of vertices.
cl = capture_and_loss()
for names in ("b c", "a b c d"):
    m = MultiGame(cl.graph, cl.set(names))
    print(f"{{{names}}}: short first -> {m.outcome(Player.SHORT).value}, "
          f"cut first -> {m.outcome(Player.CUT).value}")
