import numpy as np
import pytest

from oracles import cycle_adjacency
from qgbounds import build_context, complete_graph, from_classical, left_mult_op
from qgbounds.algebra import matrix_unit
from qgbounds.translate import (
    NotBimodule,
    NotIrreflexive,
    NotSelfAdjoint,
    TranslationError,
    adjacency_from_projection,
    graph_from_subspace,
    projection_distance,
    projection_from_adjacency,
    projection_onto,
    range_of,
    subspace_from_pieces,
    subspace_from_spanning,
    subspace_of,
    unvec,
    vec,
)


def test_vec_is_column_major(rng):
    X = rng.standard_normal((3, 3))
    np.testing.assert_array_equal(vec(X), X.T.ravel())
    np.testing.assert_array_equal(unvec(vec(X), 3), X)


def test_adjacency_projection_round_trip(qgraph):
    P = projection_from_adjacency(qgraph.ctx, qgraph.A)
    A = adjacency_from_projection(P)
    assert np.linalg.norm(A - qgraph.A, 2) < 1e-9


def test_subspace_round_trip(qgraph):
    S = subspace_of(qgraph)
    S2 = subspace_of(graph_from_subspace(S))
    assert S2.dim_S == S.dim_S
    assert projection_distance(S, S2) < 1e-9


def test_projection_is_orthogonal_bimodule_map(qgraph):
    P = projection_from_adjacency(qgraph.ctx, qgraph.A)
    assert P.idempotent_residual() < 1e-9
    assert P.self_adjoint_residual() < 1e-9
    assert P.bimodule_residual() < 1e-9


def test_classical_projection_is_schur_mask(rng):
    adj = cycle_adjacency(5)
    ctx = build_context((1,) * 5)
    P = projection_from_adjacency(ctx, adj)
    X = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
    np.testing.assert_allclose(P(X), adj * X, atol=1e-12)


def test_c5_edge_space():
    S = subspace_of(from_classical(cycle_adjacency(5)))
    assert S.dim_S == 10


@pytest.mark.parametrize("blocks, dim_S", [((2,), 12), ((1, 1, 2), 30), ((3,), 72), ((2, 2), 56)])
def test_complete_edge_space(blocks, dim_S):
    # dim S = dim(M)^2 - dim(M') for the complete graph
    assert subspace_of(complete_graph(build_context(blocks))).dim_S == dim_S


def test_classical_spanning_set_translates_exactly():
    adj = cycle_adjacency(6)
    ctx = build_context((1,) * 6)
    spanning = []
    for u, v in zip(*np.nonzero(adj)):
        E = np.zeros((6, 6))
        E[u, v] = 1
        spanning.append(E)
    A = graph_from_subspace(subspace_from_spanning(ctx, spanning)).A
    np.testing.assert_allclose(A, adj, atol=1e-12)


def test_repeated_spanning_elements(rng):
    ctx = build_context((2,))
    Z = np.diag([1.0, -1.0])
    base = subspace_from_pieces(ctx, {(0, 0): [Z]})
    doubled = subspace_from_pieces(ctx, {(0, 0): [Z, 2 * Z, -Z]})
    assert base.dim_S == doubled.dim_S == 4
    again = subspace_from_spanning(ctx, list(base.basis) * 2 + [sum(base.basis)])
    assert again.dim_S == base.dim_S


def test_not_self_adjoint():
    ctx = build_context((2,))
    with pytest.raises(NotSelfAdjoint):
        subspace_from_spanning(ctx, [left_mult_op(ctx, matrix_unit(ctx, 0, 0, 1))])


def test_not_bimodule():
    ctx = build_context((2,))
    X = np.zeros((4, 4))
    X[0, 3] = X[3, 0] = 1
    with pytest.raises(NotBimodule):
        subspace_from_spanning(ctx, [X])


def test_not_irreflexive():
    ctx = build_context((1, 1))
    loops = [np.diag([1.0, 0.0]), np.diag([0.0, 1.0])]
    with pytest.raises(NotIrreflexive) as err:
        subspace_from_spanning(ctx, loops)
    assert err.value.residual > 0.5
    # fine when loops are allowed
    S = subspace_from_spanning(ctx, loops, irreflexive=False)
    assert S.dim_S == 2


def test_empty_spanning_set():
    with pytest.raises(TranslationError):
        subspace_from_spanning(build_context((2,)), [])


def test_range_of_projection(qgraph):
    S = subspace_of(qgraph)
    assert projection_distance(range_of(projection_onto(S)), S) < 1e-9
