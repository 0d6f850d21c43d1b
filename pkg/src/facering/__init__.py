"""Exact combinatorics of face rings of simplicial complexes.

The package computes f- and h-vectors, Alexander duals, Hilbert series, and
graded Betti numbers (via reduced homology of induced subcomplexes), and
cross-checks the closed-form Betti, vanishing, inequality, and multiplicity
identities that hold when the resolution is pure or linear. All arithmetic
is exact; nothing here uses floating point.
"""

from .alexander import alexander_dual, dual_dimension_check, dual_f_vector, k_star
from .betti import (
    GradedBettiTable,
    ResolutionShape,
    classify_resolution,
    dual_linearity_cohen_macaulay,
    hochster_betti,
    is_cohen_macaulay,
    pure_betti_sequence,
    reisner_cohen_macaulay,
)
from .complexes import (
    FVector,
    HVector,
    MAX_VERTICES,
    SimplicialComplex,
    build_complex,
    f_from_h,
    f_vector,
    faces_by_dimension,
    h_from_f,
    is_quasi_forest,
    minimal_nonfaces,
    quasi_forest_sequence,
)
from .errors import DocumentError, FaceRingError, PreconditionError, ResourceLimitError
from .formulas import (
    CheckRecord,
    VerificationReport,
    betti_from_h_linear,
    betti_from_h_pure,
    betti_inequality_check,
    chordal_suite,
    cm_dual_suite,
    eagon_reiner_identity_check,
    multiplicity_from_pure_resolution,
    vanishing_sum,
    verify_complex,
    verify_graph,
)
from .generators import all_complexes, random_complex, random_quasi_forest
from .graphs import Graph, clique_complex, complement, is_chordal, one_skeleton, random_chordal
from .hilbert import (
    HilbertSeries,
    hilbert_polynomial,
    multiplicity,
    series_coefficients,
    series_from_complex,
    series_from_resolution,
)
from .homology import reduced_betti_numbers, reduced_homology_rank
from .io import complex_document, document_text, graph_document, load_path, parse_document

__version__ = "0.1.0"
