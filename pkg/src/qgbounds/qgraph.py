"""Quantum adjacency operators and their axioms."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .algebra import (
    DEFAULT_TOL,
    AlgebraContext,
    build_context,
    residual,
    sandwich,
    to_gns,
    from_gns,
)


class GraphError(ValueError):
    pass


class NotClassicalGraph(GraphError):
    pass


AXIOMS = (
    "schur_idempotent",
    "undirected",
    "self_adjoint",
    "star_preserving",
    "reflexive",
    "irreflexive",
    "completely_positive",
)

# what a matrix must satisfy to be an (undirected) quantum adjacency matrix
REQUIRED = ("schur_idempotent", "undirected", "self_adjoint", "star_preserving")


@dataclass(frozen=True)
class AxiomReport:
    residuals: dict
    tol: float = DEFAULT_TOL

    def passed(self, name: str) -> bool:
        return self.residuals[name] < self.tol

    @property
    def verdicts(self) -> dict:
        return {k: self.passed(k) for k in AXIOMS}

    @property
    def is_quantum_graph(self) -> bool:
        return all(self.passed(k) for k in REQUIRED)

    @property
    def is_irreflexive_graph(self) -> bool:
        return self.is_quantum_graph and self.passed("irreflexive")

    def __getattr__(self, name):
        if name in AXIOMS:
            return self.residuals[name]
        raise AttributeError(name)


def _as_operator(ctx: AlgebraContext, X) -> np.ndarray:
    X = np.asarray(X, dtype=complex)
    if X.shape != (ctx.dim, ctx.dim):
        raise GraphError(f"operator of shape {X.shape}, expected {(ctx.dim, ctx.dim)}")
    return X


def schur_product(ctx: AlgebraContext, X, Y) -> np.ndarray:
    """Quantum Schur product ``delta^-2 m (X (x) Y) m*``."""
    X = _as_operator(ctx, X)
    Y = _as_operator(ctx, Y)
    return sandwich(ctx, X, Y) / ctx.delta_sq


def undirected_transform(ctx: AlgebraContext, A) -> np.ndarray:
    """``(I (x) eta* m)(I (x) A (x) I)(m* eta (x) I)`` as a dim x dim matrix."""
    A = _as_operator(ctx, A)
    m = ctx.m_tensor
    eta = ctx.unit_vector
    W = np.einsum("rpq,r->pq", m.conj(), eta)
    V = np.einsum("r,rbx->bx", eta.conj(), m)
    return W @ A.T @ V


def star_matrix(ctx: AlgebraContext) -> np.ndarray:
    """Permutation ``S`` with ``to_gns(x*) = S @ conj(to_gns(x))``."""
    S = np.zeros((ctx.dim, ctx.dim))
    S[np.arange(ctx.dim), ctx.star_permutation] = 1.0
    return S


def choi_matrix(ctx: AlgebraContext, A) -> np.ndarray:
    """Choi matrix of ``A`` viewed as a map on ``M`` inside ``M_K``.

    ``M`` sits block-diagonally in ``M_K`` with ``K = sum n_i``; ``A`` is
    composed with the compression onto the diagonal blocks, which does not
    change complete positivity.
    """
    A = _as_operator(ctx, A)
    K = sum(ctx.blocks)
    starts = np.cumsum((0,) + ctx.blocks[:-1])
    C = np.zeros((K * K, K * K), dtype=complex)
    for o, n, k0 in zip(ctx.offsets, ctx.blocks, starts):
        for j in range(n):
            for k in range(n):
                col = o + j * n + k
                # to_gns(e_jk) has the single entry 1/scale
                out = from_gns(ctx, A[:, col] / ctx.scales[col])
                big = np.zeros((K, K), dtype=complex)
                for blk, n2, s2 in zip(out, ctx.blocks, starts):
                    big[s2 : s2 + n2, s2 : s2 + n2] = blk
                a, b = k0 + j, k0 + k
                C[a * K : (a + 1) * K, b * K : (b + 1) * K] = big
    return C


def validate(ctx: AlgebraContext, A, tol: float = DEFAULT_TOL) -> AxiomReport:
    A = _as_operator(ctx, A)
    scale = float(np.linalg.norm(A))
    d2 = ctx.delta_sq
    eye = np.eye(ctx.dim)
    S = star_matrix(ctx)
    loops = sandwich(ctx, A, eye)
    choi = choi_matrix(ctx, A)
    choi = (choi + choi.conj().T) / 2
    min_eig = float(np.linalg.eigvalsh(choi)[0]) if choi.size else 0.0
    res = {
        "schur_idempotent": residual(schur_product(ctx, A, A) - A, scale),
        "undirected": residual(undirected_transform(ctx, A) - A, scale),
        "self_adjoint": residual(A - A.conj().T, scale),
        "star_preserving": residual(A @ S - S @ A.conj(), scale),
        "reflexive": residual(loops - d2 * eye, scale),
        "irreflexive": residual(loops, scale),
        "completely_positive": max(0.0, -min_eig) / max(1.0, scale),
    }
    return AxiomReport(residuals=res, tol=tol)


@dataclass(frozen=True, eq=False)
class QuantumGraph:
    ctx: AlgebraContext
    A: np.ndarray = field(repr=False)
    name: str = ""
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        object.__setattr__(self, "A", _as_operator(self.ctx, self.A))

    @property
    def dim(self) -> int:
        return self.ctx.dim

    @cached_property
    def axioms(self) -> AxiomReport:
        return validate(self.ctx, self.A, self.tol)


def check_classical_adjacency(adj) -> np.ndarray:
    adj = np.asarray(adj)
    if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
        raise NotClassicalGraph(f"adjacency must be square, got shape {adj.shape}")
    if not np.isin(adj, (0, 1)).all():
        raise NotClassicalGraph("adjacency entries must be 0 or 1")
    if (adj != adj.T).any():
        raise NotClassicalGraph("adjacency is not symmetric")
    if np.diag(adj).any():
        raise NotClassicalGraph("adjacency has self-loops")
    return adj.astype(int)


def from_classical(adj, name: str = "") -> QuantumGraph:
    adj = check_classical_adjacency(adj)
    n = adj.shape[0]
    if n == 0:
        raise NotClassicalGraph("graph has no vertices")
    ctx = build_context((1,) * n)
    return QuantumGraph(ctx, adj.astype(complex), name=name)


def complete_graph(ctx: AlgebraContext, reflexive: bool = False) -> QuantumGraph:
    eta = ctx.unit_vector
    A = ctx.delta_sq * np.outer(eta, eta.conj())
    if not reflexive:
        A = A - np.eye(ctx.dim)
    name = "K_M" + ("" if not reflexive else " (reflexive)")
    return QuantumGraph(ctx, A, name=name)


def empty_graph(ctx: AlgebraContext) -> QuantumGraph:
    return QuantumGraph(ctx, np.zeros((ctx.dim, ctx.dim), dtype=complex), name="empty")


def apply(G: QuantumGraph, x) -> tuple:
    """``A`` applied to an algebra element."""
    return from_gns(G.ctx, G.A @ to_gns(G.ctx, x))
