"""Finite-dimensional C*-algebras with their tracial delta-form.

An algebra ``M = M_{n_1} + ... + M_{n_N}`` is described by its block sizes.
Elements are tuples of square complex arrays, one per block.  The GNS space
``L^2(M)`` is identified with ``C^dim`` through a fixed orthonormal basis:
blocks in order, matrix units ``e_jk`` row-major inside each block, each unit
scaled by ``sqrt(dim / n_i)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence, Tuple

import numpy as np

DEFAULT_TOL = 1e-9

AlgebraElement = Tuple[np.ndarray, ...]


class AlgebraError(ValueError):
    """Malformed algebra description or element."""


def residual(r: np.ndarray, scale: float = 1.0) -> float:
    """Frobenius norm of ``r`` normalized by ``max(1, scale)``."""
    return float(np.linalg.norm(r)) / max(1.0, float(scale))


@dataclass(frozen=True)
class AlgebraSpec:
    blocks: Tuple[int, ...]

    def __post_init__(self):
        blocks = tuple(self.blocks)
        if len(blocks) == 0:
            raise AlgebraError("block list is empty")
        for n in blocks:
            if int(n) != n or n < 1:
                raise AlgebraError(f"block sizes must be positive integers, got {n!r}")
        object.__setattr__(self, "blocks", tuple(int(n) for n in blocks))

    @property
    def dim(self) -> int:
        return sum(n * n for n in self.blocks)

    @property
    def is_classical(self) -> bool:
        return all(n == 1 for n in self.blocks)


@dataclass(frozen=True, eq=False)
class AlgebraContext:
    """An algebra together with its Plancherel trace and multiplication map.

    ``m_tensor[r, p, q]`` is the coefficient of basis vector ``r`` in the
    product of basis vectors ``p`` and ``q``.  ``m_matrix`` is its
    ``dim x dim**2`` flattening with the left tensor factor outer.
    """

    spec: AlgebraSpec
    m_tensor: np.ndarray = field(repr=False)

    @property
    def blocks(self) -> Tuple[int, ...]:
        return self.spec.blocks

    @property
    def dim(self) -> int:
        return self.spec.dim

    @property
    def delta_sq(self) -> float:
        return float(self.dim)

    @cached_property
    def offsets(self) -> Tuple[int, ...]:
        out, o = [], 0
        for n in self.blocks:
            out.append(o)
            o += n * n
        return tuple(out)

    @cached_property
    def scales(self) -> np.ndarray:
        """Per-coordinate factor: GNS coordinate = matrix entry / scale."""
        return np.concatenate(
            [np.full(n * n, np.sqrt(self.dim / n)) for n in self.blocks]
        )

    @cached_property
    def m_matrix(self) -> np.ndarray:
        d = self.dim
        return self.m_tensor.reshape(d, d * d)

    @cached_property
    def m_star_matrix(self) -> np.ndarray:
        return self.m_matrix.conj().T

    @cached_property
    def unit_vector(self) -> np.ndarray:
        """GNS coordinates of the unit, i.e. the column of eta."""
        return to_gns(self, unit(self))

    @cached_property
    def gns_basis(self) -> Tuple[AlgebraElement, ...]:
        eye = np.eye(self.dim)
        return tuple(from_gns(self, eye[:, r]) for r in range(self.dim))

    @cached_property
    def star_permutation(self) -> np.ndarray:
        """Index map with ``to_gns(x*) = conj(to_gns(x))[perm]``."""
        perm = np.empty(self.dim, dtype=int)
        for o, n in zip(self.offsets, self.blocks):
            for j in range(n):
                for k in range(n):
                    perm[o + j * n + k] = o + k * n + j
        return perm

    def block_index(self) -> np.ndarray:
        """Block label for every GNS coordinate."""
        return np.concatenate([np.full(n * n, i) for i, n in enumerate(self.blocks)])


def build_context(spec: AlgebraSpec | Sequence[int]) -> AlgebraContext:
    if not isinstance(spec, AlgebraSpec):
        spec = AlgebraSpec(tuple(spec))
    d = spec.dim
    m = np.zeros((d, d, d), dtype=complex)
    o = 0
    for n in spec.blocks:
        s = np.sqrt(d / n)
        # b_jk b_kl = s b_jl
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    m[o + j * n + l, o + j * n + k, o + k * n + l] = s
        o += n * n
    return AlgebraContext(spec=spec, m_tensor=m)


def _check(ctx: AlgebraContext, x: Sequence[np.ndarray]) -> AlgebraElement:
    if len(x) != len(ctx.blocks):
        raise AlgebraError(f"expected {len(ctx.blocks)} blocks, got {len(x)}")
    out = []
    for xi, n in zip(x, ctx.blocks):
        xi = np.asarray(xi, dtype=complex)
        if xi.shape != (n, n):
            raise AlgebraError(f"block of shape {xi.shape}, expected {(n, n)}")
        out.append(xi)
    return tuple(out)


def element(ctx: AlgebraContext, blocks: Sequence) -> AlgebraElement:
    return _check(ctx, [np.atleast_2d(np.asarray(b, dtype=complex)) for b in blocks])


def unit(ctx: AlgebraContext) -> AlgebraElement:
    return tuple(np.eye(n, dtype=complex) for n in ctx.blocks)


def zero(ctx: AlgebraContext) -> AlgebraElement:
    return tuple(np.zeros((n, n), dtype=complex) for n in ctx.blocks)


def matrix_unit(ctx: AlgebraContext, block: int, j: int, k: int) -> AlgebraElement:
    x = list(zero(ctx))
    x[block][j, k] = 1.0
    return tuple(x)


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return tuple(a @ b for a, b in zip(x, y))


def adjoint(x: AlgebraElement) -> AlgebraElement:
    return tuple(a.conj().T for a in x)


def random_element(ctx: AlgebraContext, rng: np.random.Generator) -> AlgebraElement:
    return tuple(
        rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        for n in ctx.blocks
    )


def psi(ctx: AlgebraContext, x: Sequence[np.ndarray]) -> complex:
    """The Plancherel trace ``(1/dim) sum_i n_i Tr(x_i)``."""
    x = _check(ctx, x)
    return complex(sum(n * np.trace(xi) for n, xi in zip(ctx.blocks, x)) / ctx.dim)


def to_gns(ctx: AlgebraContext, x: Sequence[np.ndarray]) -> np.ndarray:
    x = _check(ctx, x)
    return np.concatenate([xi.reshape(-1) for xi in x]) / ctx.scales


def from_gns(ctx: AlgebraContext, v: np.ndarray) -> AlgebraElement:
    v = np.asarray(v, dtype=complex)
    if v.shape != (ctx.dim,):
        raise AlgebraError(f"GNS vector of shape {v.shape}, expected {(ctx.dim,)}")
    w = v * ctx.scales
    return tuple(
        w[o : o + n * n].reshape(n, n) for o, n in zip(ctx.offsets, ctx.blocks)
    )


def inner(ctx: AlgebraContext, x: Sequence[np.ndarray], y: Sequence[np.ndarray]) -> complex:
    """GNS inner product ``<x, y> = psi(y* x)``, linear in ``x``."""
    return complex(np.vdot(to_gns(ctx, y), to_gns(ctx, x)))


def mult_adjoint_apply(ctx: AlgebraContext, x: Sequence[np.ndarray]) -> np.ndarray:
    """``m*`` applied to ``x``; a ``dim**2`` vector, left factor outer."""
    return ctx.m_star_matrix @ to_gns(ctx, x)


def left_mult_op(ctx: AlgebraContext, x: Sequence[np.ndarray]) -> np.ndarray:
    """Matrix of ``y -> x y`` on the GNS basis."""
    x = _check(ctx, x)
    out = np.zeros((ctx.dim, ctx.dim), dtype=complex)
    for o, n, xi in zip(ctx.offsets, ctx.blocks, x):
        out[o : o + n * n, o : o + n * n] = np.kron(xi, np.eye(n))
    return out


def right_mult_op(ctx: AlgebraContext, x: Sequence[np.ndarray]) -> np.ndarray:
    """Matrix of ``y -> y x`` on the GNS basis."""
    x = _check(ctx, x)
    out = np.zeros((ctx.dim, ctx.dim), dtype=complex)
    for o, n, xi in zip(ctx.offsets, ctx.blocks, x):
        out[o : o + n * n, o : o + n * n] = np.kron(np.eye(n), xi.T)
    return out


def commutant_basis(ctx: AlgebraContext) -> list[np.ndarray]:
    """Right multiplications by the GNS basis; they span ``M'``."""
    return [right_mult_op(ctx, b) for b in ctx.gns_basis]


def left_regular_basis(ctx: AlgebraContext) -> list[np.ndarray]:
    return [left_mult_op(ctx, b) for b in ctx.gns_basis]


def sandwich(ctx: AlgebraContext, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """``m (X (x) Y) m*`` for operators ``X, Y`` on ``L^2(M)``."""
    m = ctx.m_tensor
    return np.einsum("rpq,pa,qb,sab->rs", m, X, Y, m.conj(), optimize=True)


def delta_form_residual(ctx: AlgebraContext) -> float:
    """``||m m* - delta^2 I||_F / delta^2``."""
    mm = ctx.m_matrix @ ctx.m_star_matrix
    return float(np.linalg.norm(mm - ctx.delta_sq * np.eye(ctx.dim))) / ctx.delta_sq
