"""Checking the quantum adjacency axioms."""

import numpy as np

from qgbounds import build_context, complete_graph, from_classical, validate

# classical graphs sit inside the theory with every block of size 1
c5 = np.roll(np.eye(5, dtype=int), 1, axis=1)
c5 = c5 + c5.T
G = from_classical(c5, "C5")
print(G.axioms.verdicts)

# the complete quantum graph on M_2
K = complete_graph(build_context((2,)))
for name, r in K.axioms.residuals.items():
    print(f"{name:20s} {r:.2e}")

# a directed edge breaks self-adjointness and undirectedness
A = np.zeros((3, 3))
A[0, 1] = 1
rep = validate(build_context((1, 1, 1)), A)
print("directed edge is a quantum graph?", rep.is_quantum_graph)
