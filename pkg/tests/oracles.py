"""Independent reference values used to freeze expected results.

Nothing here imports qgbounds.
"""

import itertools
import math

import numpy as np


def brute_chromatic(adj):
    """Smallest k admitting a proper k-coloring, by exhaustive search."""
    adj = np.asarray(adj)
    n = adj.shape[0]
    if n == 0:
        return 0
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if adj[u, v]]
    for k in range(1, n + 1):
        # fix vertex 0 to color 0 to cut symmetric duplicates
        for rest in itertools.product(range(k), repeat=n - 1):
            col = (0,) + rest
            if all(col[u] != col[v] for u, v in edges):
                return k
    return n


def cycle_adjacency(n):
    A = np.zeros((n, n), dtype=int)
    for v in range(n):
        A[v, (v + 1) % n] = A[(v + 1) % n, v] = 1
    return A


def cycle_spectrum(n):
    return np.sort([2 * math.cos(2 * math.pi * k / n) for k in range(n)])[::-1]


def complete_bipartite_adjacency(m, n):
    A = np.zeros((m + n, m + n), dtype=int)
    A[:m, m:] = 1
    A[m:, :m] = 1
    return A


def complete_quantum_spectra(dim):
    """Eigenvalues of A, L, Q for the irreflexive complete graph on a quantum set
    of dimension ``dim``, descending."""
    A = [dim - 1.0] + [-1.0] * (dim - 1)
    L = [float(dim)] * (dim - 1) + [0.0]
    Q = [2.0 * (dim - 1)] + [dim - 2.0] * (dim - 1)
    return np.array(A), np.array(L), np.array(Q)


def plancherel_matrix_units(blocks):
    """Matrix units ``sqrt(dim / n_i) e_jk`` listed block by block, each as a
    dense ``K x K`` array, ``K = sum(blocks)``.  Orthonormal for the trace
    ``(1/dim) sum_i n_i Tr_i``."""
    dim = sum(n * n for n in blocks)
    K = sum(blocks)
    out = []
    o = 0
    for n in blocks:
        for j in range(n):
            for k in range(n):
                E = np.zeros((K, K))
                E[o + j, o + k] = math.sqrt(dim / n)
                out.append(E)
        o += n
    return out


def regular_bounds(spectrum, degree):
    """The five spectral bounds for a connected ``degree``-regular classical graph,
    from its adjacency spectrum alone (``L = d - A``, ``Q = d + A``)."""
    lam = np.sort(np.asarray(spectrum, dtype=float))[::-1]
    n = len(lam)
    two_m = n * degree
    pos = lam[lam > 1e-12]
    neg = lam[lam < -1e-12]
    sp, sm = float(np.sum(pos**2)), float(np.sum(neg**2))
    gamma_min = degree + lam[-1]
    gamma_max = degree + lam[0]
    theta_max = degree - lam[-1]
    return {
        "hoffman": 1 + lam[0] / abs(lam[-1]),
        "edge": 1 + two_m / (two_m - n * gamma_min),
        "sum_squares": 1 + max(sp / sm, sm / sp),
        "inertia": 1 + max(len(pos) / len(neg), len(neg) / len(pos)),
        "laplacian": 1 + lam[0] / (lam[0] - gamma_max + theta_max),
    }


# frozen from regular_bounds(cycle_spectrum(5), 2)
C5_BOUNDS = {
    "hoffman": 2.23606797749979,
    "edge": 2.2360679774997894,
    "sum_squares": 2.0991063585226795,
    "inertia": 2.5,
    "laplacian": 2.23606797749979,
}
C5_S_PLUS = 4.76393202250021
C5_S_MINUS = 5.23606797749979
