"""Spectral lower bounds on chromatic numbers."""

from qgbounds import all_bounds, build_context, complete_graph, from_classical
from qgbounds.coloring import classical_chromatic

petersen = [[0] * 10 for _ in range(10)]
for u, v in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (3, 8),
             (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]:
    petersen[u][v] = petersen[v][u] = 1

r = all_bounds(from_classical(petersen))
for name, value in r.bounds().items():
    print(f"{name:12s} {value:.6f}")
print("chromatic number", classical_chromatic(petersen))

# on complete quantum graphs every bound equals dim(M)
for blocks in [(2,), (1, 1, 2), (3,)]:
    r = all_bounds(complete_graph(build_context(blocks)))
    print(blocks, {k: round(v, 9) for k, v in r.bounds().items()})
