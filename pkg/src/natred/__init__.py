"""Prescribed Ricci curvature in the naturally reductive setting.

Data model: a structure (complement dimension n plus isotropy blocks with
dimensions d_i and Casimir constants kappa_i), a metric given by its
coefficients (alpha, alpha_1, ..., alpha_k) relative to the background form,
and a prescribed symmetric tensor T = (t_a, t_1, ..., t_k) in the same block
coordinates.  The package decides whether Ric(g) = c*T has a solution g with
c > 0, finds it when it does, and reproduces the closed-form solvability
region of the so6-diag example structure.
"""

from .conditions import (
    ConditionVerdict,
    cad_interval_so6,
    compactness_bounds,
    max_kappa_ratio_index,
    necessary_condition,
    necessary_curve_scalar,
    scalar_ceiling,
    simple_k_solvable,
    sufficient_condition,
    sufficient_curve_scalar,
)
from .curvature import (
    CurvatureReport,
    grad_scalar_on_slice,
    ricci,
    ricci_residual,
    scalar,
    scalar_on_slice,
    slice_alpha,
    trace_g,
)
from .errors import (
    CentralBlockNotOneDim,
    ConsistencyError,
    CurveDomain,
    DegenerateTa,
    EmptyStructure,
    InfeasiblePoint,
    KappaOutOfRange,
    NatredError,
    NoSimpleBlocks,
    NonConvergence,
    NonPositiveCoefficient,
    NonPositiveT1,
    NotSimpleK,
    ShapeMismatch,
    UnknownCatalogEntry,
)
from .solver import (
    ClassifyRecord,
    RatioRoot,
    Solution,
    SolveOutcome,
    SolveStatus,
    SolverOptions,
    cad_verdict_so6,
    classify,
    maximize_scalar,
    metric_from_ratios,
    solve_algebraic,
    solve_simple_k,
)
from .structure import (
    Block,
    MetricCoefficients,
    PrescribedTensor,
    StructureData,
    catalog_lookup,
    catalog_names,
    make_structure,
    structure_from_dict,
    tensor_from_dict,
    total_dimension,
    trace_q,
)

__version__ = "0.1.0"

__all__ = [
    "Block",
    "CentralBlockNotOneDim",
    "ClassifyRecord",
    "ConditionVerdict",
    "ConsistencyError",
    "CurvatureReport",
    "CurveDomain",
    "DegenerateTa",
    "EmptyStructure",
    "InfeasiblePoint",
    "KappaOutOfRange",
    "MetricCoefficients",
    "NatredError",
    "NoSimpleBlocks",
    "NonConvergence",
    "NonPositiveCoefficient",
    "NonPositiveT1",
    "NotSimpleK",
    "PrescribedTensor",
    "RatioRoot",
    "ShapeMismatch",
    "Solution",
    "SolveOutcome",
    "SolveStatus",
    "SolverOptions",
    "StructureData",
    "UnknownCatalogEntry",
    "cad_interval_so6",
    "cad_verdict_so6",
    "catalog_lookup",
    "catalog_names",
    "classify",
    "compactness_bounds",
    "grad_scalar_on_slice",
    "make_structure",
    "max_kappa_ratio_index",
    "maximize_scalar",
    "metric_from_ratios",
    "necessary_condition",
    "necessary_curve_scalar",
    "ricci",
    "ricci_residual",
    "scalar",
    "scalar_ceiling",
    "scalar_on_slice",
    "simple_k_solvable",
    "slice_alpha",
    "solve_algebraic",
    "solve_simple_k",
    "structure_from_dict",
    "sufficient_condition",
    "sufficient_curve_scalar",
    "tensor_from_dict",
    "total_dimension",
    "trace_g",
    "trace_q",
]
