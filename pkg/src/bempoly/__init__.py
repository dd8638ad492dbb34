"""Combinatorics and moment polytopes of Barbasch-Evens-Magyar varieties for (GL_{p+q}, GL_p x GL_q)."""

from .bem import (
    FixedPoint, PoincarePoly, Subword, bem_points, bs_moment_points, dim_bem, fixed_points,
    flat, join, moment_image, poincare, reference_long_element, strata_lattice, subwords,
    tangent_weights,
)
from .clans import (
    Clan, enumerate_clans, gamma_shuffled_perms, is_matchless, is_noncrossing,
    is_smooth_orbit_closure, parse_clan, rank_minus, rank_pair, rank_plus,
)
from .polytope import (
    PolytopeSummary, affine_dim, cone_contains_line, hull_summary, is_face, predicted_dim,
    vertices,
)
from .ranklin import Flag, dim_intersection, in_orbit_closure, project_rho, rank
from .weyl import Permutation, Word, apply_to_vector, demazure_product, is_reduced, length

__version__ = "0.1.0"
