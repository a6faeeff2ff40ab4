"""Spectra of quantum graphs and spectral lower bounds on chromatic numbers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .algebra import DEFAULT_TOL, from_gns, residual, right_mult_op
from .qgraph import QuantumGraph
from .translate import subspace_of


class NotHermitian(ValueError):
    pass


class GraphNotIrreflexive(ValueError):
    pass


class BadPartition(ValueError):
    pass


BOUND_NAMES = ("hoffman", "edge", "sum_squares", "inertia", "laplacian")


@dataclass(frozen=True, eq=False)
class Spectrum:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray = field(repr=False)

    @property
    def max(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def min(self) -> float:
        return float(self.eigenvalues[-1])

    def __len__(self):
        return len(self.eigenvalues)


@dataclass(frozen=True)
class Inertia:
    n_plus: int
    n_zero: int
    n_minus: int


def eig_hermitian(H, tol: float = DEFAULT_TOL) -> Spectrum:
    H = np.asarray(H, dtype=complex)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise NotHermitian(f"expected a square matrix, got shape {H.shape}")
    res = residual(H - H.conj().T, np.linalg.norm(H))
    if res >= tol:
        raise NotHermitian(f"matrix is not self-adjoint (residual {res:.3g})")
    w, v = np.linalg.eigh((H + H.conj().T) / 2)
    return Spectrum(w[::-1].copy(), v[:, ::-1].copy())


def sign_threshold(spec: Spectrum, tol: float = DEFAULT_TOL) -> float:
    if len(spec) == 0:
        return tol
    return tol * max(1.0, abs(spec.max), abs(spec.min))


def inertia(spec: Spectrum, tol: float = DEFAULT_TOL) -> Inertia:
    tau = sign_threshold(spec, tol)
    lam = spec.eigenvalues
    n_plus = int(np.sum(lam > tau))
    n_minus = int(np.sum(lam < -tau))
    return Inertia(n_plus, len(lam) - n_plus - n_minus, n_minus)


def degree_matrix(G: QuantumGraph) -> np.ndarray:
    """Right multiplication by ``A 1``."""
    ctx = G.ctx
    return right_mult_op(ctx, from_gns(ctx, G.A @ ctx.unit_vector))


def laplacians(G: QuantumGraph) -> tuple[np.ndarray, np.ndarray]:
    """``(L, Q) = (D - A, D + A)``."""
    D = degree_matrix(G)
    return D - G.A, D + G.A


@dataclass(frozen=True)
class BoundsReport:
    dim_M: int
    edge_number_2m: float
    trace_D: float
    lambda_max: float
    lambda_min: float
    s_plus: float
    s_minus: float
    n_plus: int
    n_zero: int
    n_minus: int
    gamma_max: float
    gamma_min: float
    theta_max: float
    hoffman: float
    edge: float
    sum_squares: float
    inertia: float
    laplacian: float
    applicable: dict
    best: float

    def bounds(self) -> dict:
        return {name: getattr(self, name) for name in BOUND_NAMES}


def all_bounds(G: QuantumGraph, tol: float | None = None) -> BoundsReport:
    """The five spectral lower bounds on the chromatic numbers of ``G``.

    A bound whose denominator vanishes (within the eigenvalue sign threshold)
    is marked inapplicable and reported as 1.
    """
    tol = G.tol if tol is None else tol
    ax = G.axioms
    if not ax.is_quantum_graph:
        bad = [k for k in ("schur_idempotent", "undirected", "self_adjoint", "star_preserving") if not ax.passed(k)]
        raise GraphNotIrreflexive(f"not an undirected quantum graph: {', '.join(bad)} failed")
    if not ax.passed("irreflexive"):
        raise GraphNotIrreflexive(f"graph has loops (residual {ax.irreflexive:.3g})")

    dim = G.ctx.dim
    spec_A = eig_hermitian(G.A, tol)
    tau = sign_threshold(spec_A, tol)
    L, Q = laplacians(G)
    spec_L = eig_hermitian(L, tol)
    spec_Q = eig_hermitian(Q, tol)
    dim_S = float(subspace_of(G, tol).dim_S)
    trace_D = float(np.trace(degree_matrix(G)).real)

    lam = spec_A.eigenvalues
    lmax, lmin = spec_A.max, spec_A.min
    s_plus = float(np.sum(lam[lam > tau] ** 2))
    s_minus = float(np.sum(lam[lam < -tau] ** 2))
    inert = inertia(spec_A, tol)
    gmax, gmin = spec_Q.max, spec_Q.min
    tmax = spec_L.max

    values, ok = {}, {}

    ok["hoffman"] = abs(lmin) > tau
    values["hoffman"] = 1 + lmax / abs(lmin) if ok["hoffman"] else 1.0

    denom = dim_S - dim * gmin
    ok["edge"] = denom > tau
    values["edge"] = 1 + dim_S / denom if ok["edge"] else 1.0

    ok["sum_squares"] = s_plus > tau**2 and s_minus > tau**2
    values["sum_squares"] = (
        1 + max(s_plus / s_minus, s_minus / s_plus) if ok["sum_squares"] else 1.0
    )

    ok["inertia"] = inert.n_plus > 0 and inert.n_minus > 0
    values["inertia"] = (
        1 + max(inert.n_plus / inert.n_minus, inert.n_minus / inert.n_plus)
        if ok["inertia"] else 1.0
    )

    denom = lmax - gmax + tmax
    ok["laplacian"] = denom > tau
    values["laplacian"] = 1 + lmax / denom if ok["laplacian"] else 1.0

    best = max([1.0] + [values[k] for k in BOUND_NAMES if ok[k]])
    return BoundsReport(
        dim_M=dim, edge_number_2m=dim_S, trace_D=trace_D,
        lambda_max=lmax, lambda_min=lmin, s_plus=s_plus, s_minus=s_minus,
        n_plus=inert.n_plus, n_zero=inert.n_zero, n_minus=inert.n_minus,
        gamma_max=gmax, gamma_min=gmin, theta_max=tmax,
        applicable=ok, best=best, **values,
    )


def _slices(sizes: Sequence[int], n: int) -> list[slice]:
    sizes = [int(s) for s in sizes]
    if any(s < 1 for s in sizes) or sum(sizes) != n:
        raise BadPartition(f"partition {sizes} does not split a matrix of size {n}")
    edges = np.cumsum([0] + sizes)
    return [slice(a, b) for a, b in zip(edges[:-1], edges[1:])]


def block_eigen_slack(H, sizes: Sequence[int]) -> float:
    """``sum_i lmax(H_ii) - (n-1) lmin(H) - lmax(H)`` for an n-block partition.

    Nonnegative for every self-adjoint ``H``.
    """
    H = np.asarray(H, dtype=complex)
    parts = _slices(sizes, H.shape[0])
    w = np.linalg.eigvalsh(H)
    rhs = sum(np.linalg.eigvalsh(H[s, s])[-1] for s in parts)
    return float(rhs - (len(parts) - 1) * w[0] - w[-1])


def trace_split_slack(X, Y, sizes: Sequence[int], tol: float = DEFAULT_TOL) -> float:
    """``(r-1) Tr(Y*Y) - Tr(X*X)`` for PSD ``X, Y`` with equal diagonal blocks and ``XY = 0``."""
    X = np.asarray(X, dtype=complex)
    Y = np.asarray(Y, dtype=complex)
    parts = _slices(sizes, X.shape[0])
    scale = max(np.linalg.norm(X), np.linalg.norm(Y))
    if residual(X @ Y, scale**2) >= tol:
        raise ValueError("XY is not zero")
    for s in parts:
        if residual(X[s, s] - Y[s, s], scale) >= tol:
            raise ValueError("diagonal blocks of X and Y differ")
    r = len(parts)
    return float(((r - 1) * np.trace(Y.conj().T @ Y) - np.trace(X.conj().T @ X)).real)


def hollow(H, sizes: Sequence[int]) -> np.ndarray:
    """Copy of ``H`` with its diagonal blocks set to zero."""
    H = np.array(H, dtype=complex)
    for s in _slices(sizes, H.shape[0]):
        H[s, s] = 0
    return H


def spectral_split(H) -> tuple[np.ndarray, np.ndarray]:
    """Positive and negative parts ``(B, C)`` with ``H = B - C``."""
    w, v = np.linalg.eigh(np.asarray(H, dtype=complex))
    B = (v * np.clip(w, 0, None)) @ v.conj().T
    C = (v * np.clip(-w, 0, None)) @ v.conj().T
    return B, C


@dataclass(frozen=True)
class BlockLemmaReport:
    block_eigen: float
    trace_split: float

    def holds(self, tol: float = DEFAULT_TOL) -> bool:
        return self.block_eigen >= -tol and self.trace_split >= -tol


def check_block_lemma(H, sizes: Sequence[int], tol: float = DEFAULT_TOL) -> BlockLemmaReport:
    """Evaluate both block-matrix inequalities on ``H`` and the given partition.

    The eigenvalue inequality is tested on ``H`` itself.  The trace inequality
    is tested, in both directions, on the positive and negative parts of ``H``
    with its diagonal blocks removed; those parts are PSD, orthogonal, and
    share diagonal blocks.
    """
    H = np.asarray(H, dtype=complex)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise BadPartition(f"expected a square matrix, got shape {H.shape}")
    first = block_eigen_slack(H, sizes)
    B, C = spectral_split(hollow(H, sizes))
    second = min(trace_split_slack(B, C, sizes, tol), trace_split_slack(C, B, sizes, tol))
    return BlockLemmaReport(first, second)
