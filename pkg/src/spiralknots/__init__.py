"""Invariants of spiral knots and links: Seifert matrices, Alexander and
Jones polynomials, genus, determinant, bridge-number bounds and censuses."""

from .alexander import AlexanderPoly, alexander, alexander_all, char_poly, c_poly
from .braidcore import SpiralParams, build_diagram, canonicalize_epsilon, epsilon_stats, make_params
from .bridge import P_SEED, Q_SEED, coloring_bound, seed_arcs
from .census import CensusRecord, InvariantViolation, emit_table, enumerate_census, find_collisions
from .invariants import genus, knot_determinant, obstruct_spiral, torus_alexander
from .jones import JonesPolynomial, jones_polynomial, kauffman_bracket
from .polynomial import LaurentPoly, normalize_unit
from .seifert import seifert_matrix

__all__ = [
    "AlexanderPoly", "alexander", "alexander_all", "char_poly", "c_poly",
    "SpiralParams", "build_diagram", "canonicalize_epsilon", "epsilon_stats", "make_params",
    "P_SEED", "Q_SEED", "coloring_bound", "seed_arcs",
    "CensusRecord", "InvariantViolation", "emit_table", "enumerate_census", "find_collisions",
    "genus", "knot_determinant", "obstruct_spiral", "torus_alexander",
    "JonesPolynomial", "jones_polynomial", "kauffman_bracket",
    "LaurentPoly", "normalize_unit", "seifert_matrix",
]
