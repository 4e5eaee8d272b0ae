"""Exact decision engine for the Hartogs phenomenon on semiabelian G-manifolds.

The structure sheaf of ``X = G x^T Y`` is Hartogs iff the weight lattice
``L`` of ``C[G]`` meets the dual cone of the closed complement of the fan of
``Y`` only at the origin.
"""

from .cone import (
    Cone,
    cone_from_ineqs,
    cone_from_rays,
    contains,
    dual,
    intersect,
    is_trivial,
    restrict_to_subspace,
)
from .fan import (
    CellComplex,
    CompleteFan,
    Fan,
    build_arrangement,
    complement_cells,
    complement_closure_dual,
    count_ends,
    support_contains,
    validate_fan,
)
from .hartogs import (
    MultipleEnds,
    SemiabelianProblem,
    Sublattice,
    Verdict,
    character_lattice,
    decide,
    decide_toric,
    per_end_diagnostic,
    verify_witness,
)
from .linalg import congruence_sublattice, hnf, kernel_lattice

__all__ = [
    "CellComplex", "CompleteFan", "Cone", "Fan", "MultipleEnds", "SemiabelianProblem",
    "Sublattice", "Verdict", "build_arrangement", "character_lattice", "complement_cells",
    "complement_closure_dual", "cone_from_ineqs", "cone_from_rays", "congruence_sublattice",
    "contains", "count_ends", "decide", "decide_toric", "dual", "hnf", "intersect",
    "is_trivial", "kernel_lattice", "per_end_diagnostic", "restrict_to_subspace",
    "support_contains", "validate_fan", "verify_witness",
]
