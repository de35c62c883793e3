"""Exact Newton numbers and non-degenerate Milnor number jumps.

The package computes, in exact integer and rational arithmetic, the
Newton number of a convenient support set and the smallest positive drop
of the Milnor number over non-degenerate deformations of a Brieskorn-Pham
singularity.  The fast path is an inductive algorithm over coordinate
hyperplanes combined with a box-constrained diophantine search; a
brute-force minimization over all lattice points below the Newton diagram
is shipped alongside it as an independent cross-check.
"""

from .brieskorn_pham import BrieskornPham, is_interior
from .deformation import (
    MonomialDeformation,
    boundary_jump,
    interior_jump,
    jump_by_newton_numbers,
    monomial_jump,
)
from .diophantine import (
    DiophantineSolution,
    canonical_box_solution,
    extended_gcd,
    gcd_combination,
    is_pairwise_coprime,
    search_box_solution,
)
from .errors import IntegralityError, InvalidInput
from .geometry import (
    DiagramFacet,
    SupportSet,
    gamma_plus_contains,
    lower_hull_facets,
    simplex_normalized_volume,
    volume_under_diagram,
)
from .jump import (
    HyperplaneJump,
    JumpReport,
    TraceEntry,
    hyperplane_jump,
    nondegenerate_jump,
    nondegenerate_jump_bruteforce,
    two_variable_closed_form,
)
from .newton import is_convenient, newton_number, restrict_to_subspace

__version__ = "0.1.0"

__all__ = [
    "BrieskornPham",
    "DiagramFacet",
    "DiophantineSolution",
    "HyperplaneJump",
    "IntegralityError",
    "InvalidInput",
    "JumpReport",
    "MonomialDeformation",
    "SupportSet",
    "TraceEntry",
    "boundary_jump",
    "canonical_box_solution",
    "extended_gcd",
    "gamma_plus_contains",
    "gcd_combination",
    "hyperplane_jump",
    "interior_jump",
    "is_convenient",
    "is_interior",
    "is_pairwise_coprime",
    "jump_by_newton_numbers",
    "lower_hull_facets",
    "monomial_jump",
    "newton_number",
    "nondegenerate_jump",
    "nondegenerate_jump_bruteforce",
    "restrict_to_subspace",
    "search_box_solution",
    "simplex_normalized_volume",
    "two_variable_closed_form",
    "volume_under_diagram",
]
