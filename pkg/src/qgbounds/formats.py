"""Text formats: quantum-graph files, certificate files and DIMACS graphs.

Quantum-graph file::

    name: C5
    blocks: 1 1 1 1 1
    adjacency:
    0 0  1 0  0 0  ...        (one row per line, "re im" per entry)

or, instead of ``adjacency:``, ``sbasis: k`` followed by ``k`` operators of
``dim x dim`` entries in the same layout.  Certificate file::

    colors: 3
    aux: 1
    <c matrices of (dim*h) x (dim*h) entries>

Lines starting with ``#`` are comments.  Numbers are written with 12
significant digits and ``-0`` is normalized to ``0``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .algebra import AlgebraSpec


class FormatError(ValueError):
    pass


class MalformedHeader(FormatError):
    pass


class VertexOutOfRange(FormatError):
    pass


class SelfLoop(FormatError):
    pass


_KEY = re.compile(r"^([a-z_]+):\s*(.*)$")


def fmt(x: float) -> str:
    s = format(float(x), ".12g")
    return "0" if s in ("-0", "0", "-0.0") else s


def _fmt_matrix(M: np.ndarray) -> list[str]:
    return ["  ".join(f"{fmt(z.real)} {fmt(z.imag)}" for z in row) for row in np.asarray(M)]


def _sections(text: str) -> list[tuple[str, str, list[str]]]:
    """Split into ``(key, inline value, data tokens)`` triples."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _KEY.match(line)
        if m:
            out.append((m.group(1), m.group(2).strip(), []))
        elif out:
            out[-1][2].extend(line.split())
        else:
            raise FormatError(f"line {lineno}: data before any section header")
    return out


def _complex_entries(tokens: Sequence[str], count: int, what: str) -> np.ndarray:
    if len(tokens) != 2 * count:
        raise FormatError(f"{what}: expected {count} complex entries, got {len(tokens) / 2:g}")
    try:
        vals = np.array([float(t) for t in tokens])
    except ValueError as e:
        raise FormatError(f"{what}: {e}") from None
    return vals[0::2] + 1j * vals[1::2]


def _int(value: str, what: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise FormatError(f"{what}: expected an integer, got {value!r}") from None


@dataclass
class QGraphFile:
    blocks: tuple
    adjacency: np.ndarray | None = None
    sbasis: list | None = None
    name: str | None = None

    @property
    def dim(self) -> int:
        return AlgebraSpec(self.blocks).dim


def parse_qgraph(text: str) -> QGraphFile:
    secs = _sections(text)
    seen = {}
    for key, value, data in secs:
        if key in seen:
            raise FormatError(f"duplicate section {key!r}")
        if key not in ("name", "blocks", "adjacency", "sbasis"):
            raise FormatError(f"unknown section {key!r}")
        seen[key] = (value, data)
    if "blocks" not in seen:
        raise FormatError("missing 'blocks:' section")
    if ("adjacency" in seen) == ("sbasis" in seen):
        raise FormatError("exactly one of 'adjacency:' and 'sbasis:' is required")
    value, data = seen["blocks"]
    tokens = value.split() + data
    if not tokens:
        raise FormatError("'blocks:' is empty")
    try:
        spec = AlgebraSpec(tuple(_int(t, "blocks") for t in tokens))
    except ValueError as e:
        raise FormatError(str(e)) from None
    d = spec.dim
    out = QGraphFile(blocks=spec.blocks)
    if "name" in seen:
        out.name = seen["name"][0]
        if seen["name"][1]:
            raise FormatError("'name:' must fit on one line")
    if "adjacency" in seen:
        value, data = seen["adjacency"]
        tokens = value.split() + data
        out.adjacency = _complex_entries(tokens, d * d, "adjacency").reshape(d, d)
    else:
        value, data = seen["sbasis"]
        k = _int(value, "sbasis")
        if k < 0:
            raise FormatError("sbasis count must be nonnegative")
        flat = _complex_entries(data, k * d * d, "sbasis")
        out.sbasis = [M for M in flat.reshape(k, d, d)]
    return out


def format_qgraph(f: QGraphFile) -> str:
    lines = []
    if f.name:
        lines.append(f"name: {f.name}")
    lines.append("blocks: " + " ".join(str(n) for n in f.blocks))
    if f.adjacency is not None:
        lines.append("adjacency:")
        lines.extend(_fmt_matrix(f.adjacency))
    else:
        basis = f.sbasis or []
        lines.append(f"sbasis: {len(basis)}")
        for j, B in enumerate(basis):
            if j:
                lines.append("")
            lines.extend(_fmt_matrix(B))
    return "\n".join(lines) + "\n"


@dataclass
class CertFile:
    colors: int
    aux: int
    projections: list


def parse_certificate(text: str) -> CertFile:
    secs = _sections(text)
    keys = [k for k, _, _ in secs]
    if keys != ["colors", "aux"]:
        raise FormatError("certificate must contain 'colors:' then 'aux:'")
    (_, cval, cdata), (_, hval, data) = secs
    if cdata:
        raise FormatError("unexpected data after 'colors:'")
    c = _int(cval, "colors")
    h = _int(hval, "aux")
    if c < 1 or h < 1:
        raise FormatError("colors and aux must be positive")
    n_entries = len(data) // 2
    if n_entries % c:
        raise FormatError(f"{n_entries} entries do not split into {c} matrices")
    N = int(round(np.sqrt(n_entries // c)))
    if N * N * c != n_entries or N % h:
        raise FormatError("matrix entries do not form square (dim*h) x (dim*h) matrices")
    flat = _complex_entries(data, c * N * N, "certificate")
    return CertFile(c, h, [M for M in flat.reshape(c, N, N)])


def format_certificate(f: CertFile) -> str:
    lines = [f"colors: {f.colors}", f"aux: {f.aux}"]
    for j, P in enumerate(f.projections):
        if j:
            lines.append("")
        lines.extend(_fmt_matrix(P))
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> np.ndarray:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if n is not None:
                raise MalformedHeader(f"line {lineno}: second problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise MalformedHeader(f"line {lineno}: expected 'p edge <n> <m>'")
            try:
                n, _ = int(parts[2]), int(parts[3])
            except ValueError:
                raise MalformedHeader(f"line {lineno}: non-integer size") from None
            if n < 1:
                raise MalformedHeader(f"line {lineno}: graph needs at least one vertex")
        elif parts[0] == "e":
            if n is None:
                raise MalformedHeader(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise FormatError(f"line {lineno}: expected 'e <i> <j>'")
            try:
                i, j = int(parts[1]), int(parts[2])
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer vertex") from None
            for v in (i, j):
                if not 1 <= v <= n:
                    raise VertexOutOfRange(f"line {lineno}: vertex {v} not in 1..{n}")
            if i == j:
                raise SelfLoop(f"line {lineno}: self-loop at vertex {i}")
            edges.append((i - 1, j - 1))
        else:
            raise FormatError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise MalformedHeader("missing 'p edge' line")
    adj = np.zeros((n, n), dtype=int)
    for i, j in edges:
        adj[i, j] = adj[j, i] = 1
    return adj
