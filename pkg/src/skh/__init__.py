"""Sutured Khovanov homology over F2 for tangles and annular links.

The package computes the bigraded homology of balanced tangles in the
thickened disk, the triply graded homology of links in the thickened
annulus, and applies the rank-1 criterion to decide whether a tangle is a
braid.  Diagrams are Morse slice words (cups, caps, crossings) entered
through a small text format; see :mod:`skh.diagram`.
"""

__version__ = "0.1.0"

from .diagram import (
    AnnularDiagram,
    MorseSlice,
    SliceKind,
    TangleDiagram,
    annular_closure,
    braid_word_diagram,
    compose,
    cut_braid_closure,
    figure_eight_cut,
    identity_tangle,
    input_digest,
    juxtapose,
    parse,
    parse_tangle,
    to_text,
    trefoil_cut,
    turnback_tangle,
    unknot_cut,
    validate,
)
from .errors import (
    CompositionError,
    DiagramParseError,
    DiagramStructureError,
    IncompatibleInputError,
    InternalCheckError,
    MoveError,
    OrientationError,
    SizeCapError,
    SkhError,
    UnbalancedError,
)
from .f2 import GradedDims, SparseF2Matrix, homology_dims, rank_f2
from .complexes import (
    ComplexMode,
    GradedComplex,
    KhGenerator,
    associated_graded,
    build_complex,
    enumerate_generators,
)
from .resolution import Resolution, ResolvedComponent, resolve, saddle_classify
from .moves import MorseMove, MoveKind, apply_move, legal_moves
from .invariants import (
    BraidVerdict,
    CutReport,
    ParityReport,
    SpectralReport,
    TensorReport,
    cut_check,
    detect_braid,
    kh_total,
    khr_link,
    parity_check,
    skh_annular,
    skh_tangle,
    spectral_bound_check,
    tensor_check,
)
from .oracle import oracle_homology
from .verify import SUITES, SuiteReport, run_suite

__all__ = [
    "AnnularDiagram",
    "BraidVerdict",
    "ComplexMode",
    "CompositionError",
    "CutReport",
    "DiagramParseError",
    "DiagramStructureError",
    "GradedComplex",
    "GradedDims",
    "IncompatibleInputError",
    "InternalCheckError",
    "KhGenerator",
    "MorseMove",
    "MorseSlice",
    "MoveError",
    "MoveKind",
    "OrientationError",
    "ParityReport",
    "Resolution",
    "ResolvedComponent",
    "SUITES",
    "SizeCapError",
    "SkhError",
    "SliceKind",
    "SparseF2Matrix",
    "SpectralReport",
    "SuiteReport",
    "TangleDiagram",
    "TensorReport",
    "UnbalancedError",
    "annular_closure",
    "apply_move",
    "associated_graded",
    "braid_word_diagram",
    "build_complex",
    "compose",
    "cut_braid_closure",
    "cut_check",
    "detect_braid",
    "enumerate_generators",
    "figure_eight_cut",
    "homology_dims",
    "identity_tangle",
    "input_digest",
    "juxtapose",
    "kh_total",
    "khr_link",
    "legal_moves",
    "oracle_homology",
    "parity_check",
    "parse",
    "parse_tangle",
    "rank_f2",
    "resolve",
    "run_suite",
    "saddle_classify",
    "skh_annular",
    "skh_tangle",
    "spectral_bound_check",
    "tensor_check",
    "to_text",
    "trefoil_cut",
    "turnback_tangle",
    "unknot_cut",
    "validate",
]
