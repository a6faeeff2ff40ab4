"""Command-line interface.

Exit codes: 0 on success or passing verdict, 1 on a failing verdict or
invalid input, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .algebra import DEFAULT_TOL, build_context, residual
from .coloring import ColoringCertificate, ColoringError, check_certificate, classical_chromatic
from .formats import (
    FormatError,
    QGraphFile,
    fmt,
    format_qgraph,
    parse_certificate,
    parse_dimacs,
    parse_qgraph,
)
from .qgraph import AXIOMS, REQUIRED, QuantumGraph, complete_graph, validate
from .spectra import BOUND_NAMES, GraphNotIrreflexive, all_bounds, eig_hermitian, inertia, laplacians
from .translate import (
    TranslationError,
    adjacency_from_projection,
    projection_distance,
    projection_from_adjacency,
    projection_onto,
    range_of,
    subspace_from_spanning,
)


class CliError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror}") from None


def _load_graph(path: str, tol: float):
    """Returns ``(file, graph, subspace or None)``."""
    f = parse_qgraph(_read(path))
    ctx = build_context(f.blocks)
    if f.adjacency is not None:
        return f, QuantumGraph(ctx, f.adjacency, name=f.name or "", tol=tol), None
    # reflexivity is judged later from the adjacency operator
    S = subspace_from_spanning(ctx, f.sbasis, irreflexive=False, tol=tol)
    A = adjacency_from_projection(projection_onto(S), tol)
    return f, QuantumGraph(ctx, A, name=f.name or "", tol=tol), S


def _row(*cols, widths=(20, 20)) -> str:
    parts = [str(c).ljust(w) for c, w in zip(cols[:-1], widths)] + [str(cols[-1])]
    return "".join(parts).rstrip()


def _values(xs) -> str:
    return " ".join(fmt(x) for x in xs)


def cmd_validate(args) -> int:
    f, G, _ = _load_graph(args.qgraph, args.tolerance)
    rep = validate(G.ctx, G.A, args.tolerance)
    ok = rep.is_quantum_graph
    out = []
    if args.format == "text":
        if G.name:
            out.append(_row("name", G.name))
        out.append(_row("blocks", " ".join(map(str, f.blocks))))
        out.append(_row("axiom", "residual", "verdict"))
        for k in AXIOMS:
            out.append(_row(k, fmt(rep.residuals[k]), "pass" if rep.passed(k) else "fail"))
        out.append(_row("quantum_graph", "", "yes" if ok else "no"))
    elif args.format == "kv":
        for k in AXIOMS:
            out.append(f"{k}.residual={fmt(rep.residuals[k])}")
            out.append(f"{k}.pass={'true' if rep.passed(k) else 'false'}")
        out.append(f"quantum_graph={'true' if ok else 'false'}")
    else:
        for k in AXIOMS:
            out.append(json.dumps(
                {"axiom": k, "residual": float(fmt(rep.residuals[k])), "pass": rep.passed(k)}
            ))
        out.append(json.dumps({"quantum_graph": ok, "required": list(REQUIRED)}))
    print("\n".join(out))
    return 0 if ok else 1


def cmd_spectrum(args) -> int:
    _, G, _ = _load_graph(args.qgraph, args.tolerance)
    if not G.axioms.is_quantum_graph:
        raise CliError("input is not an undirected quantum graph; run 'validate'")
    spec = eig_hermitian(G.A, args.tolerance)
    L, Q = laplacians(G)
    inert = inertia(spec, args.tolerance)
    print(_row("A", _values(spec.eigenvalues), widths=(4,)))
    print(_row("L", _values(eig_hermitian(L, args.tolerance).eigenvalues), widths=(4,)))
    print(_row("Q", _values(eig_hermitian(Q, args.tolerance).eigenvalues), widths=(4,)))
    print(f"inertia {inert.n_plus} {inert.n_zero} {inert.n_minus}")
    return 0


def cmd_bounds(args) -> int:
    _, G, _ = _load_graph(args.qgraph, args.tolerance)
    r = all_bounds(G, args.tolerance)
    out = [_row("bound", "value", "applicable")]
    for k in BOUND_NAMES:
        out.append(_row(k, fmt(getattr(r, k)), "yes" if r.applicable[k] else "no"))
    out.append(_row("best", fmt(r.best)))
    out.append("")
    inputs = [
        ("lambda_max", r.lambda_max), ("lambda_min", r.lambda_min),
        ("s_plus", r.s_plus), ("s_minus", r.s_minus),
        ("n_plus", r.n_plus), ("n_zero", r.n_zero), ("n_minus", r.n_minus),
        ("gamma_max", r.gamma_max), ("gamma_min", r.gamma_min),
        ("theta_max", r.theta_max), ("dim_S", r.edge_number_2m),
        ("edge_number", r.edge_number_2m / 2), ("dim_M", r.dim_M),
    ]
    for k, v in inputs:
        out.append(_row(k, fmt(v)))
    print("\n".join(out))
    return 0


def cmd_translate(args) -> int:
    f, G, S = _load_graph(args.qgraph, args.tolerance)
    tol = args.tolerance
    if S is not None:
        S2 = range_of(projection_from_adjacency(G.ctx, G.A), tol)
        res = projection_distance(S, S2)
        out = QGraphFile(f.blocks, adjacency=G.A, name=f.name)
    else:
        P = projection_from_adjacency(G.ctx, G.A)
        A2 = adjacency_from_projection(P, tol)
        res = residual(A2 - G.A, np.linalg.norm(G.A))
        S2 = range_of(P, tol)
        out = QGraphFile(f.blocks, sbasis=list(S2.basis), name=f.name)
        print(f"# dim_S: {S2.dim_S}")
    print(f"# round_trip_residual: {fmt(res)}")
    sys.stdout.write(format_qgraph(out))
    return 0


def cmd_import_dimacs(args) -> int:
    adj = parse_dimacs(_read(args.file))
    name = None if args.file == "-" else Path(args.file).stem
    sys.stdout.write(format_qgraph(QGraphFile((1,) * adj.shape[0], adjacency=adj, name=name)))
    return 0


def _blocks_arg(text: str) -> tuple:
    try:
        blocks = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad block list {text!r}") from None
    if not blocks or min(blocks) < 1:
        raise argparse.ArgumentTypeError("block sizes must be positive")
    return blocks


def cmd_complete(args) -> int:
    G = complete_graph(build_context(args.blocks), reflexive=args.reflexive)
    sys.stdout.write(format_qgraph(QGraphFile(args.blocks, adjacency=G.A, name=G.name.replace(" ", "_"))))
    return 0


def cmd_check_coloring(args) -> int:
    _, G, S = _load_graph(args.qgraph, args.tolerance)
    cf = parse_certificate(_read(args.cert))
    cert = ColoringCertificate(cf.colors, cf.aux, tuple(cf.projections))
    rep = check_certificate(G, cert, S, lemmas=args.lemmas, seed=args.seed, tol=args.tolerance)
    out = [_row("check", "residual", "verdict")]
    for k, v in rep.worst().items():
        out.append(_row(k, fmt(v), "pass" if v < rep.tol else "fail"))
    if args.lemmas:
        p, t = rep.pinching, rep.twirling
        for k, v in [
            ("pinching_A", p.pinching_A),
            ("pinching_commutant", p.pinching_commutant),
            ("diagonal_blocks", max(p.diagonal_blocks)),
            ("twirl_unitary", t.unitary),
            ("twirl_power", t.power),
            ("twirling_A", t.twirling_A),
            ("twirling_commutant", t.twirling_commutant),
            ("twirl_pinch_equality", t.pinching_equality),
        ]:
            out.append(_row(k, fmt(v), "pass" if v < rep.tol else "fail"))
        if t.degenerate:
            out.append(_row("note", "single color: twirling of A is degenerate"))
    out.append(_row("verdict", "", "valid" if rep.verdict else "invalid"))
    print("\n".join(out))
    return 0 if rep.verdict else 1


def cmd_chromatic(args) -> int:
    f, G, _ = _load_graph(args.qgraph, args.tolerance)
    if not G.ctx.spec.is_classical:
        raise CliError("chromatic number is only computed for classical contexts (all blocks 1)")
    A = G.A
    adj = np.rint(A.real).astype(int)
    if residual(A - adj, np.linalg.norm(A)) >= args.tolerance:
        raise CliError("adjacency is not a 0/1 matrix")
    print(classical_chromatic(adj))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=float, default=argparse.SUPPRESS,
                        help=f"numeric tolerance (default {DEFAULT_TOL:g})")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for randomized probes (default 0)")

    parser = argparse.ArgumentParser(
        prog="qgbounds", parents=[common],
        description="Quantum graphs: axioms, translation, spectral chromatic bounds, colorings.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the quantum adjacency axioms")
    p.add_argument("qgraph")
    p.add_argument("--format", choices=("text", "kv", "json-lines"), default="text")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("spectrum", parents=[common], help="eigenvalues of A, L, Q and inertia")
    p.add_argument("qgraph")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("bounds", parents=[common], help="spectral lower bounds on chromatic numbers")
    p.add_argument("qgraph")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("translate", parents=[common], help="convert between adjacency and S basis")
    p.add_argument("qgraph")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("import-dimacs", parents=[common], help="DIMACS edge list to qgraph file")
    p.add_argument("file")
    p.set_defaults(func=cmd_import_dimacs)

    p = sub.add_parser("complete", parents=[common], help="complete quantum graph on given blocks")
    p.add_argument("--blocks", type=_blocks_arg, required=True)
    p.add_argument("--reflexive", action="store_true")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("check-coloring", parents=[common], help="verify a coloring certificate")
    p.add_argument("qgraph")
    p.add_argument("cert")
    p.add_argument("--lemmas", action="store_true", help="add pinching/twirling residuals")
    p.set_defaults(func=cmd_check_coloring)

    p = sub.add_parser("chromatic", parents=[common], help="exact chromatic number (classical only)")
    p.add_argument("qgraph")
    p.set_defaults(func=cmd_chromatic)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if not hasattr(args, "tolerance"):
        args.tolerance = DEFAULT_TOL
    if not hasattr(args, "seed"):
        args.seed = 0
    try:
        return args.func(args)
    except (CliError, FormatError, TranslationError, ColoringError, GraphNotIrreflexive, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
