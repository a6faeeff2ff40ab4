"""Spectral bounds and coloring certificates for quantum graphs."""

__version__ = "0.1.0"

from .algebra import (
    DEFAULT_TOL,
    AlgebraContext,
    AlgebraSpec,
    build_context,
    commutant_basis,
    from_gns,
    left_mult_op,
    mult_adjoint_apply,
    psi,
    right_mult_op,
    to_gns,
)
from .coloring import (
    ColoringCertificate,
    cert_for_complete,
    cert_from_classical_coloring,
    check_pinching,
    check_twirling,
    classical_chromatic,
    verify_certificate,
)
from .qgraph import QuantumGraph, complete_graph, empty_graph, from_classical, schur_product, validate
from .spectra import all_bounds, check_block_lemma, degree_matrix, eig_hermitian, laplacians
from .translate import (
    OperatorSubspace,
    Superoperator,
    adjacency_from_projection,
    graph_from_subspace,
    projection_from_adjacency,
    projection_onto,
    range_of,
    subspace_from_spanning,
    subspace_of,
)
