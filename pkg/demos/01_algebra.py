"""Finite quantum sets: blocks, the GNS basis and the multiplication map."""

import numpy as np

from qgbounds import build_context
from qgbounds.algebra import delta_form_residual, matrix_unit, mult_adjoint_apply, psi, to_gns, unit

# M = C (+) M_2: one classical point and one 2x2 block, dim = 1 + 4
ctx = build_context((1, 2))
print("blocks", ctx.blocks, "dim", ctx.dim)

# The basis of L^2(M) is matrix units scaled to unit length
print("scales", ctx.scales)
print("psi(1) =", psi(ctx, unit(ctx)))

# m m* = dim(M) I is what makes the trace a delta-form
print("delta-form residual", delta_form_residual(ctx))

# m* splits a matrix unit into pairs that multiply back to it
v = mult_adjoint_apply(ctx, matrix_unit(ctx, 1, 0, 1))
print("nonzero entries of m*(e_01):", np.flatnonzero(np.abs(v) > 1e-12))
print("m m*(e_01) == 5 e_01:", np.allclose(ctx.m_matrix @ v, 5 * to_gns(ctx, matrix_unit(ctx, 1, 0, 1))))
