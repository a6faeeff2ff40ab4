"""From edge spaces to adjacency operators and back."""

import numpy as np

from qgbounds import build_context, graph_from_subspace, subspace_of
from qgbounds.translate import projection_distance, subspace_from_pieces

ctx = build_context((2,))

# the bimodule generated by sigma_z (x) Y: a four dimensional edge space
sz = np.diag([1.0, -1.0])
S = subspace_from_pieces(ctx, {(0, 0): [sz]})
print("dim S =", S.dim_S)

G = graph_from_subspace(S, name="sigma_z")
print("axioms hold:", G.axioms.is_quantum_graph)
print("A =\n", np.round(G.A.real, 6))

# going back gives the same subspace
print("projection distance", projection_distance(S, subspace_of(G)))
