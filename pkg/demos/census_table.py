"""Property census of connected graphs, from the built-in generator."""
import time

from shannon_game.census import census_graphs, enumerate_connected

print("n\tgraphs\tS-free\tT-free\t>=2 tri-free\tboth")
for n in range(1, 8):
    t = time.perf_counter()
    row = census_graphs(enumerate_connected(n), n)
    print(row.tsv(), f"\t({time.perf_counter() - t:.1f}s)")
print("Larger orders: pipe a graph6 stream into `shannon census --n N`.")
