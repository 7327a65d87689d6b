"""spreadmax: spread maximization for symmetric matrices with boxed entries.

Compute the spread (largest minus smallest eigenvalue) of dense real
symmetric matrices, evaluate the Mirsky upper bound, run structural
maximizer diagnostics, and solve the spread-maximization problem over
S_n[a, b] exactly by enumerating the {a, b} vertex set.
"""

from .backend import backend_name
from .bounds import BoundReport, bound_report, frobenius_norm_sq, mirsky_bound, trace
from .core import (
    Interval,
    Spectrum,
    SymMatrix,
    eigen_decompose,
    hadamard_spread_form,
    make_matrix,
    rayleigh,
    scale,
    shift,
    spread,
)
from .matrixio import format_float, json_dumps, matrix_to_text, parse_matrix_file, parse_matrix_text
from .properties import PropertyBatteryReport, run_property_battery
from .search import (
    ExtremalityReport,
    GrowthReport,
    RankSurvey,
    SearchConfig,
    SearchResult,
    SearchStats,
    VertexPattern,
    canonical_form,
    conjecture_report,
    coordinate_ascent,
    enumerate_vertices,
    exhaustive_max,
    lemma4_check,
    theorem5_falsify,
    vertex_mirsky,
)
from .structure import (
    MaximizerReport,
    SegmentReport,
    additivity_test,
    analyze,
    border_extend,
    decompose_along_entry,
    diagonal_condition,
    eigenproduct_condition,
    eigenspace_intersection,
    is_extreme_point,
    numerical_rank,
    segment_property_check,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "ExtremalityReport",
    "GrowthReport",
    "Interval",
    "MaximizerReport",
    "PropertyBatteryReport",
    "RankSurvey",
    "SearchConfig",
    "SearchResult",
    "SearchStats",
    "SegmentReport",
    "Spectrum",
    "SymMatrix",
    "VertexPattern",
    "additivity_test",
    "analyze",
    "backend_name",
    "border_extend",
    "bound_report",
    "canonical_form",
    "conjecture_report",
    "coordinate_ascent",
    "decompose_along_entry",
    "diagonal_condition",
    "eigen_decompose",
    "eigenproduct_condition",
    "eigenspace_intersection",
    "enumerate_vertices",
    "exhaustive_max",
    "format_float",
    "frobenius_norm_sq",
    "hadamard_spread_form",
    "is_extreme_point",
    "json_dumps",
    "lemma4_check",
    "make_matrix",
    "matrix_to_text",
    "mirsky_bound",
    "numerical_rank",
    "parse_matrix_file",
    "parse_matrix_text",
    "rayleigh",
    "run_property_battery",
    "scale",
    "segment_property_check",
    "shift",
    "spread",
    "theorem5_falsify",
    "trace",
    "vertex_mirsky",
]
