"""Exact-arithmetic normal surfaces on natural lens space triangulations."""

from .arithmetic import (
    ContinuedFraction,
    KappaSequence,
    bredon_wood_crosscap,
    check_formulae,
    continued_fraction,
    crosscap_b_terms,
    lens_sequence,
)
from .construction import (
    CompressionSchedule,
    PatchPlacement,
    SurfaceReport,
    apply_step,
    compression_schedule,
    construct_surface,
    h0,
    sheet_count,
    verify_placements,
)
from .fundamentality import (
    MinimalityVerdict,
    haken_fund_criterion,
    minimality_oracle,
    q_minimality_oracle,
)
from .haken import (
    HakenVector,
    component_count,
    edge_weight,
    euler_characteristic,
    is_orientable,
    matching_equations,
    satisfies_matching,
    square_condition,
    vertex_link_vector,
)
from .qcoords import (
    QVector,
    in_solution_space,
    is_admissible,
    q_basis,
    reconstruct_tdisks,
    solve_in_basis,
)
from .triangulation import LensParams, Triangulation, build_triangulation, edge_degree

__version__ = "0.1.0"

__all__ = [
    "ContinuedFraction",
    "KappaSequence",
    "bredon_wood_crosscap",
    "check_formulae",
    "continued_fraction",
    "crosscap_b_terms",
    "lens_sequence",
    "CompressionSchedule",
    "PatchPlacement",
    "SurfaceReport",
    "apply_step",
    "compression_schedule",
    "construct_surface",
    "h0",
    "sheet_count",
    "verify_placements",
    "MinimalityVerdict",
    "haken_fund_criterion",
    "minimality_oracle",
    "q_minimality_oracle",
    "HakenVector",
    "component_count",
    "edge_weight",
    "euler_characteristic",
    "is_orientable",
    "matching_equations",
    "satisfies_matching",
    "square_condition",
    "vertex_link_vector",
    "QVector",
    "in_solution_space",
    "is_admissible",
    "q_basis",
    "reconstruct_tdisks",
    "solve_in_basis",
    "LensParams",
    "Triangulation",
    "build_triangulation",
    "edge_degree",
]
