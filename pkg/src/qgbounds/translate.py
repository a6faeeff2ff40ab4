"""Operator subspaces, bimodule projections and adjacency operators.

Superoperators act on column-major vectorized operators, so the map
``X -> L X R`` has matrix ``kron(R.T, L)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .algebra import (
    DEFAULT_TOL,
    AlgebraContext,
    commutant_basis,
    left_regular_basis,
    residual,
)
from .qgraph import QuantumGraph


class TranslationError(ValueError):
    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


class NotSelfAdjoint(TranslationError):
    pass


class NotBimodule(TranslationError):
    pass


class NotIrreflexive(TranslationError):
    pass


class DecompositionResidualTooLarge(TranslationError):
    pass


def vec(X: np.ndarray) -> np.ndarray:
    return np.asarray(X).reshape(-1, order="F")


def unvec(v: np.ndarray, d: int) -> np.ndarray:
    return np.asarray(v).reshape(d, d, order="F")


def sandwich_superop(L: np.ndarray, R: np.ndarray) -> np.ndarray:
    """Matrix of ``X -> L X R``."""
    return np.kron(R.T, L)


@dataclass(frozen=True, eq=False)
class OperatorSubspace:
    """Subspace of ``B(L^2(M))`` with a trace-orthonormal basis."""

    ctx: AlgebraContext
    basis: tuple = field(repr=False)

    @property
    def dim_S(self) -> int:
        return len(self.basis)

    @cached_property
    def basis_matrix(self) -> np.ndarray:
        """Columns are the vectorized basis elements."""
        d = self.ctx.dim
        if not self.basis:
            return np.zeros((d * d, 0), dtype=complex)
        return np.stack([vec(B) for B in self.basis], axis=1)

    def project(self, X: np.ndarray) -> np.ndarray:
        V = self.basis_matrix
        return unvec(V @ (V.conj().T @ vec(X)), self.ctx.dim)

    def contains(self, X: np.ndarray) -> float:
        """Relative distance from ``X`` to the subspace."""
        return residual(X - self.project(X), np.linalg.norm(X))


@dataclass(frozen=True, eq=False)
class Superoperator:
    ctx: AlgebraContext
    matrix: np.ndarray = field(repr=False)

    def __call__(self, X: np.ndarray) -> np.ndarray:
        return unvec(self.matrix @ vec(X), self.ctx.dim)

    def idempotent_residual(self) -> float:
        P = self.matrix
        return residual(P @ P - P, np.linalg.norm(P))

    def self_adjoint_residual(self) -> float:
        P = self.matrix
        return residual(P - P.conj().T, np.linalg.norm(P))

    def bimodule_residual(self) -> float:
        """Max over commutant pairs (E, F) of ``||P(E.F) - E P(.) F||``."""
        P = self.matrix
        scale = np.linalg.norm(P)
        worst = 0.0
        for E in commutant_basis(self.ctx):
            for F in commutant_basis(self.ctx):
                T = sandwich_superop(E, F)
                worst = max(worst, residual(P @ T - T @ P, scale))
        return worst


def _orthonormal_columns(M: np.ndarray, tol: float) -> np.ndarray:
    if M.shape[1] == 0:
        return M
    U, s, _ = np.linalg.svd(M, full_matrices=False)
    if s.size == 0 or s[0] == 0:
        return U[:, :0]
    rank = int(np.sum(s > tol * s[0]))
    return U[:, :rank]


def _from_columns(ctx: AlgebraContext, V: np.ndarray) -> OperatorSubspace:
    d = ctx.dim
    return OperatorSubspace(ctx, tuple(unvec(V[:, j], d) for j in range(V.shape[1])))


def check_subspace(S: OperatorSubspace, irreflexive: bool = True, tol: float = DEFAULT_TOL) -> dict:
    """Residuals for the self-adjoint, bimodule and irreflexive conditions."""
    V = S.basis_matrix
    out = {"self_adjoint": 0.0, "bimodule": 0.0, "irreflexive": 0.0}
    if V.shape[1] == 0:
        return out
    proj = V @ V.conj().T
    adj = np.stack([vec(B.conj().T) for B in S.basis], axis=1)
    out["self_adjoint"] = residual(adj - proj @ adj, 1.0) / np.sqrt(V.shape[1])
    comm = commutant_basis(S.ctx)
    worst = 0.0
    for E in comm:
        for F in comm:
            Y = sandwich_superop(E, F) @ V
            worst = max(worst, residual(Y - proj @ Y, np.linalg.norm(Y)))
    out["bimodule"] = worst
    if irreflexive:
        C = np.stack([vec(E) / np.linalg.norm(E) for E in comm], axis=1)
        out["irreflexive"] = float(np.linalg.norm(C.conj().T @ V))
    return out


def subspace_from_spanning(
    ctx: AlgebraContext,
    spanning: Sequence[np.ndarray],
    irreflexive: bool = True,
    tol: float = DEFAULT_TOL,
) -> OperatorSubspace:
    """Orthonormalize ``spanning`` and check the quantum-graph conditions."""
    if len(spanning) == 0:
        raise TranslationError("spanning set is empty")
    d = ctx.dim
    cols = []
    for X in spanning:
        X = np.asarray(X, dtype=complex)
        if X.shape != (d, d):
            raise TranslationError(f"operator of shape {X.shape}, expected {(d, d)}")
        cols.append(vec(X))
    V = _orthonormal_columns(np.stack(cols, axis=1), tol)
    S = _from_columns(ctx, V)
    res = check_subspace(S, irreflexive, tol)
    if res["self_adjoint"] >= tol:
        raise NotSelfAdjoint("subspace is not closed under adjoint", res["self_adjoint"])
    if res["bimodule"] >= tol:
        raise NotBimodule("subspace is not a bimodule over the commutant", res["bimodule"])
    if irreflexive and res["irreflexive"] >= tol:
        raise NotIrreflexive("subspace is not orthogonal to the commutant", res["irreflexive"])
    return S


def projection_onto(S: OperatorSubspace) -> Superoperator:
    """Orthogonal projection ``X -> sum_j B_j Tr(B_j^* X)``."""
    V = S.basis_matrix
    return Superoperator(S.ctx, V @ V.conj().T)


def projection_from_adjacency(ctx: AlgebraContext, A) -> Superoperator:
    """Matrix of ``X -> delta^-2 m (A (x) X) m*``."""
    A = np.asarray(A, dtype=complex)
    d = ctx.dim
    m = ctx.m_tensor
    # T[r, s, p, q] = coefficient of X[p, q] in P(X)[r, s]
    T = np.einsum("rap,ab,sbq->rspq", m, A, m.conj(), optimize=True) / ctx.delta_sq
    mat = T.transpose(1, 0, 3, 2).reshape(d * d, d * d)
    return Superoperator(ctx, mat)


def _bimodule_frame(ctx: AlgebraContext) -> np.ndarray:
    """Columns: vectorized matrices of ``X -> L(u_a) X L(v_b)``, ``a`` outer."""
    lefts = left_regular_basis(ctx)
    cols = [sandwich_superop(La, Lb).reshape(-1) for La in lefts for Lb in lefts]
    return np.stack(cols, axis=1)


def bimodule_coefficients(P: Superoperator, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Coefficients ``c[a, b]`` with ``P = sum c_ab L(u_a) (.) L(v_b)``."""
    ctx = P.ctx
    d = ctx.dim
    frame = _bimodule_frame(ctx)
    target = P.matrix.reshape(-1)
    coef, *_ = np.linalg.lstsq(frame, target, rcond=None)
    res = residual(frame @ coef - target, np.linalg.norm(target))
    if res >= tol:
        raise DecompositionResidualTooLarge(
            "superoperator is not a bimodule map over the commutant", res
        )
    return coef.reshape(d, d)


def adjacency_from_projection(P: Superoperator, tol: float = DEFAULT_TOL) -> np.ndarray:
    """The adjacency ``A(x) = delta^2 sum_ab c_ab psi(u_a x) v_b``."""
    ctx = P.ctx
    c = bimodule_coefficients(P, tol)
    eta = ctx.unit_vector
    # psi(u_a u_t) = <u_a u_t, 1>
    psi2 = np.einsum("r,rat->at", eta.conj(), ctx.m_tensor)
    return ctx.delta_sq * c.T @ psi2


def range_of(P: Superoperator, tol: float = DEFAULT_TOL) -> OperatorSubspace:
    return _from_columns(P.ctx, _orthonormal_columns(P.matrix, tol))


def graph_from_subspace(S: OperatorSubspace, name: str = "", tol: float = DEFAULT_TOL) -> QuantumGraph:
    A = adjacency_from_projection(projection_onto(S), tol)
    return QuantumGraph(S.ctx, A, name=name, tol=tol)


def subspace_of(G: QuantumGraph, tol: float | None = None) -> OperatorSubspace:
    tol = G.tol if tol is None else tol
    return range_of(projection_from_adjacency(G.ctx, G.A), tol)


def projection_distance(S1: OperatorSubspace, S2: OperatorSubspace) -> float:
    """Operator-norm distance between the orthogonal projections."""
    d = projection_onto(S1).matrix - projection_onto(S2).matrix
    return float(np.linalg.norm(d, 2)) if d.size else 0.0


def subspace_from_pieces(
    ctx: AlgebraContext,
    pieces: dict,
    irreflexive: bool = True,
    tol: float = DEFAULT_TOL,
) -> OperatorSubspace:
    """Bimodule generated by ``Z (x) Y`` for ``Z`` in each piece, ``Y`` arbitrary.

    ``pieces[(i, j)]`` is a list of ``n_i x n_j`` matrices acting on the left
    tensor factor from block ``j`` to block ``i``.  Include ``(j, i)`` with
    the adjoints for the result to be self-adjoint.
    """
    d = ctx.dim
    spanning = []
    for (i, j), Zs in pieces.items():
        ni, nj = ctx.blocks[i], ctx.blocks[j]
        oi, oj = ctx.offsets[i], ctx.offsets[j]
        for Z in Zs:
            Z = np.asarray(Z, dtype=complex).reshape(ni, nj)
            for k in range(ni):
                for l in range(nj):
                    Y = np.zeros((ni, nj))
                    Y[k, l] = 1.0
                    X = np.zeros((d, d), dtype=complex)
                    X[oi : oi + ni * ni, oj : oj + nj * nj] = np.kron(Z, Y)
                    spanning.append(X)
    if not spanning:
        return OperatorSubspace(ctx, ())
    return subspace_from_spanning(ctx, spanning, irreflexive, tol)
