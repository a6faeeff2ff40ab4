"""Quantum colorings: certificate checks and exact classical chromatic numbers.

A certificate is a family of projections on ``L^2(M) (x) C^h`` (``L^2(M)``
outer) that should live in ``M (x) M_h``.  Since the commutant of
``M (x) M_h`` is ``M' (x) 1``, membership is checked by commutation with
``E (x) I_h`` for ``E`` running over a basis of ``M'``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .algebra import DEFAULT_TOL, AlgebraContext, commutant_basis, residual
from .qgraph import QuantumGraph, check_classical_adjacency, complete_graph
from .translate import OperatorSubspace, subspace_of


class ColoringError(ValueError):
    pass


class ImproperColoring(ColoringError):
    def __init__(self, u: int, v: int):
        super().__init__(f"edge ({u}, {v}) joins two vertices of the same color")
        self.edge = (u, v)


class TooLarge(ColoringError):
    pass


class ConstructionFailed(ColoringError):
    def __init__(self, message: str, report: "CertReport"):
        super().__init__(message)
        self.report = report


MAX_CLASSICAL_VERTICES = 20


@dataclass(frozen=True, eq=False)
class ColoringCertificate:
    c: int
    h: int
    projections: tuple = field(repr=False)

    def __post_init__(self):
        if self.c < 1 or self.h < 1:
            raise ColoringError("colors and auxiliary dimension must be positive")
        if len(self.projections) != self.c:
            raise ColoringError(f"expected {self.c} projections, got {len(self.projections)}")
        shapes = {np.shape(P) for P in self.projections}
        if len(shapes) != 1:
            raise ColoringError("projections have inconsistent shapes")
        object.__setattr__(
            self, "projections", tuple(np.asarray(P, dtype=complex) for P in self.projections)
        )

    @property
    def size(self) -> int:
        return self.projections[0].shape[0]


@dataclass(frozen=True)
class CertReport:
    idempotent: list
    self_adjoint: list
    sum_to_identity: float
    membership: list
    annihilation: list  # annihilation[a][j] for S basis element j
    tol: float = DEFAULT_TOL
    pinching: "PinchingReport | None" = None
    twirling: "TwirlingReport | None" = None

    def worst(self) -> dict:
        out = {
            "idempotent": max(self.idempotent),
            "self_adjoint": max(self.self_adjoint),
            "sum_to_identity": self.sum_to_identity,
            "membership": max(self.membership),
            "annihilation": max((max(r) for r in self.annihilation if r), default=0.0),
        }
        return out

    @property
    def verdict(self) -> bool:
        return all(v < self.tol for v in self.worst().values())


@dataclass(frozen=True)
class PinchingReport:
    pinching_A: float
    pinching_commutant: float
    diagonal_blocks: list

    def holds(self, tol: float = DEFAULT_TOL) -> bool:
        return max([self.pinching_A, self.pinching_commutant] + self.diagonal_blocks) < tol


@dataclass(frozen=True)
class TwirlingReport:
    unitary: float
    power: float
    twirling_A: float
    twirling_commutant: float
    pinching_equality: float
    degenerate: bool

    def holds(self, tol: float = DEFAULT_TOL) -> bool:
        vals = [self.unitary, self.power, self.twirling_commutant, self.pinching_equality]
        if not self.degenerate:
            vals.append(self.twirling_A)
        return max(vals) < tol


def _lift(X: np.ndarray, h: int) -> np.ndarray:
    return np.kron(X, np.eye(h))


def _check_shape(G: QuantumGraph, cert: ColoringCertificate) -> None:
    n = G.ctx.dim * cert.h
    if cert.size != n or cert.projections[0].shape != (n, n):
        raise ColoringError(
            f"projections of shape {cert.projections[0].shape}, expected {(n, n)}"
        )


def verify_certificate(
    G: QuantumGraph,
    cert: ColoringCertificate,
    S: OperatorSubspace | None = None,
    tol: float | None = None,
) -> CertReport:
    tol = G.tol if tol is None else tol
    _check_shape(G, cert)
    if S is None:
        S = subspace_of(G, tol)
    h = cert.h
    Ps = cert.projections
    N = cert.size
    comm = [_lift(E, h) for E in commutant_basis(G.ctx)]
    edges = [_lift(X, h) for X in S.basis]

    idem, sadj, memb, ann = [], [], [], []
    for P in Ps:
        scale = np.linalg.norm(P)
        idem.append(residual(P @ P - P, scale))
        sadj.append(residual(P - P.conj().T, scale))
        memb.append(
            max(residual(P @ E - E @ P, scale * np.linalg.norm(E)) for E in comm)
        )
        ann.append([residual(P @ X @ P, np.linalg.norm(X)) for X in edges])
    total = residual(sum(Ps) - np.eye(N), np.sqrt(N))
    return CertReport(idem, sadj, total, memb, ann, tol=tol)


def check_pinching(G: QuantumGraph, cert: ColoringCertificate) -> PinchingReport:
    """Residuals of ``sum_k P_k (A (x) I) P_k = 0`` and ``sum_k P_k (E (x) I) P_k = E (x) I``."""
    _check_shape(G, cert)
    h = cert.h
    A = _lift(G.A, h)
    scale = np.linalg.norm(A)
    blocks = [residual(P @ A @ P, scale) for P in cert.projections]
    pin_A = residual(sum(P @ A @ P for P in cert.projections), scale)
    worst = 0.0
    for E in commutant_basis(G.ctx):
        E = _lift(E, h)
        pinched = sum(P @ E @ P for P in cert.projections)
        worst = max(worst, residual(pinched - E, np.linalg.norm(E)))
    return PinchingReport(pin_A, worst, blocks)


def clock_unitary(cert: ColoringCertificate) -> np.ndarray:
    """``U = sum_l omega^l P_l`` with ``omega = exp(2 pi i / c)``."""
    omega = np.exp(2j * np.pi / cert.c)
    return sum(omega ** (l + 1) * P for l, P in enumerate(cert.projections))


def check_twirling(
    G: QuantumGraph,
    cert: ColoringCertificate,
    seed: int = 0,
    probes: int = 3,
) -> TwirlingReport:
    _check_shape(G, cert)
    c, h, N = cert.c, cert.h, cert.size
    U = clock_unitary(cert)
    eye = np.eye(N)
    powers = [np.linalg.matrix_power(U, k) for k in range(1, c + 1)]

    def twirl(X):
        return sum(V @ X @ V.conj().T for V in powers)

    def pinch(X):
        return sum(P @ X @ P for P in cert.projections)

    A = _lift(G.A, h)
    comm = 0.0
    for E in commutant_basis(G.ctx):
        E = _lift(E, h)
        comm = max(comm, residual(twirl(E) - c * E, c * np.linalg.norm(E)))
    rng = np.random.default_rng(seed)
    eq = 0.0
    d = G.ctx.dim
    for _ in range(probes):
        X = _lift(rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d)), h)
        eq = max(eq, residual(twirl(X) - c * pinch(X), c * np.linalg.norm(X)))
    return TwirlingReport(
        unitary=residual(U @ U.conj().T - eye, np.sqrt(N)),
        power=residual(powers[-1] - eye, np.sqrt(N)),
        twirling_A=residual(twirl(A), np.linalg.norm(A)),
        twirling_commutant=comm,
        pinching_equality=eq,
        degenerate=(c == 1),
    )


def check_certificate(
    G: QuantumGraph,
    cert: ColoringCertificate,
    S: OperatorSubspace | None = None,
    lemmas: bool = False,
    seed: int = 0,
    tol: float | None = None,
) -> CertReport:
    """``verify_certificate`` optionally extended with the pinching/twirling residuals."""
    report = verify_certificate(G, cert, S, tol)
    if not lemmas:
        return report
    return CertReport(
        report.idempotent, report.self_adjoint, report.sum_to_identity,
        report.membership, report.annihilation, tol=report.tol,
        pinching=check_pinching(G, cert), twirling=check_twirling(G, cert, seed),
    )


# -- classical colorings -------------------------------------------------


def _greedy_clique(nbrs: list) -> int:
    best = 1 if nbrs else 0
    for v in range(len(nbrs)):
        clique = [v]
        cand = set(nbrs[v])
        while cand:
            u = max(cand, key=lambda w: (len(nbrs[w] & cand), -w))
            clique.append(u)
            cand &= nbrs[u]
        best = max(best, len(clique))
    return best


def _dsatur_pick(nbrs, colors, uncolored):
    def key(v):
        sat = len({colors[u] for u in nbrs[v] if colors[u] >= 0})
        deg = sum(1 for u in nbrs[v] if colors[u] < 0)
        return (sat, deg, -v)

    return max(uncolored, key=key)


def optimal_coloring(adj) -> list[int]:
    """A minimum proper coloring by DSATUR-ordered branch and bound."""
    adj = check_classical_adjacency(adj)
    n = adj.shape[0]
    if n > MAX_CLASSICAL_VERTICES:
        raise TooLarge(f"{n} vertices exceeds the limit of {MAX_CLASSICAL_VERTICES}")
    if n == 0:
        return []
    nbrs = [set(np.flatnonzero(adj[v]).tolist()) for v in range(n)]

    # greedy DSATUR gives the initial upper bound
    colors = [-1] * n
    uncolored = set(range(n))
    while uncolored:
        v = _dsatur_pick(nbrs, colors, uncolored)
        used = {colors[u] for u in nbrs[v]}
        colors[v] = next(k for k in range(n) if k not in used)
        uncolored.remove(v)
    best = {"k": max(colors) + 1, "colors": list(colors)}
    lower = _greedy_clique(nbrs)

    def search(colors, uncolored, k_used):
        if k_used >= best["k"]:
            return
        if not uncolored:
            best["k"], best["colors"] = k_used, list(colors)
            return
        v = _dsatur_pick(nbrs, colors, uncolored)
        used = {colors[u] for u in nbrs[v]}
        uncolored.remove(v)
        for k in range(min(k_used + 1, best["k"] - 1)):
            if k in used:
                continue
            colors[v] = k
            search(colors, uncolored, max(k_used, k + 1))
            colors[v] = -1
            if best["k"] <= lower:
                break
        uncolored.add(v)

    if best["k"] > lower:
        search([-1] * n, set(range(n)), 0)
    return best["colors"]


def classical_chromatic(adj) -> int:
    colors = optimal_coloring(adj)
    return max(colors) + 1 if colors else 0


def cert_from_classical_coloring(adj, colors: Sequence[int]) -> ColoringCertificate:
    """Diagonal certificate ``P_a = sum_{color(v) = a} e_vv`` with ``h = 1``."""
    adj = check_classical_adjacency(adj)
    n = adj.shape[0]
    if len(colors) != n:
        raise ColoringError(f"{len(colors)} colors given for {n} vertices")
    for u, v in zip(*np.nonzero(np.triu(adj))):
        if colors[u] == colors[v]:
            raise ImproperColoring(int(u), int(v))
    labels = sorted(set(colors))
    Ps = []
    for lab in labels:
        Ps.append(np.diag([1.0 if col == lab else 0.0 for col in colors]).astype(complex))
    return ColoringCertificate(len(labels), 1, tuple(Ps))


def _bell_states(n: int) -> list[np.ndarray]:
    """Generalized Bell states ``(X^p Z^q (x) I)|Omega>`` as ``n x n`` arrays."""
    omega = np.exp(2j * np.pi / n)
    shift = np.roll(np.eye(n), 1, axis=0)
    clock = np.diag(omega ** np.arange(n))
    out = []
    for p in range(n):
        for q in range(n):
            W = np.linalg.matrix_power(shift, p) @ np.linalg.matrix_power(clock, q)
            out.append(W / np.sqrt(n))
    return out


def complete_aux_dim(ctx: AlgebraContext) -> int:
    """Smallest multiple of ``dim(M)`` divisible by every block size."""
    h = ctx.dim
    for n in ctx.blocks:
        h = h * n // math.gcd(h, n)
    return h


def cert_for_complete(ctx: AlgebraContext, tol: float = DEFAULT_TOL) -> ColoringCertificate:
    """A ``dim(M)``-coloring of the irreflexive complete quantum graph.

    Color ``(i, p, q)`` is supported on block ``i`` only.  There,
    ``C^h = C^{n_i} (x) C^{h/n_i}`` and the projection is the Bell projector
    ``|beta_pq><beta_pq|`` between the left factor of ``L^2(M_{n_i})`` and
    the first factor of ``C^h``, tensored with identities.
    """
    h = complete_aux_dim(ctx)
    d = ctx.dim
    Ps = []
    for o, n in zip(ctx.offsets, ctx.blocks):
        r = h // n
        for beta in _bell_states(n):
            T = np.einsum(
                "js,JS,kK,tT->jkstJKST", beta, beta.conj(), np.eye(n), np.eye(r)
            ).reshape(n * n * h, n * n * h)
            P = np.zeros((d * h, d * h), dtype=complex)
            P[o * h : (o + n * n) * h, o * h : (o + n * n) * h] = T
            Ps.append(P)
    cert = ColoringCertificate(d, h, tuple(Ps))
    report = verify_certificate(complete_graph(ctx), cert, tol=tol)
    if not report.verdict:
        raise ConstructionFailed("generated certificate does not verify", report)
    return cert
