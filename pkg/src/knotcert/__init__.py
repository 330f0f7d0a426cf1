"""Exact knot invariants and definiteness certificates from Seifert matrices
or braids, with consistency checks for periodic knots and their quotients."""

__version__ = "0.1.0"

from .exactalg import IntMatrix, Inertia, classify_form, det, direct_sum, inertia, is_definite
from .laurent import LaurentPoly, alexander_polynomial, alexander_width, poly_mul
from .invariants import (DefinitenessCertificate, SeifertMatrix, certify_definite,
                         signature, surface_genus, symmetrize, validate)
from .braid import BraidWord, burau_alexander, parse_braid, seifert_matrix_from_braid
from .periodic import PeriodicModel, check_theorem, make_periodic_model
from .curves import CylindricalCurve, check_lk_scaling, lift_curve, linking_number

__all__ = [
    "IntMatrix", "Inertia", "classify_form", "det", "direct_sum", "inertia", "is_definite",
    "LaurentPoly", "alexander_polynomial", "alexander_width", "poly_mul",
    "DefinitenessCertificate", "SeifertMatrix", "certify_definite", "signature",
    "surface_genus", "symmetrize", "validate",
    "BraidWord", "burau_alexander", "parse_braid", "seifert_matrix_from_braid",
    "PeriodicModel", "check_theorem", "make_periodic_model",
    "CylindricalCurve", "check_lk_scaling", "lift_curve", "linking_number",
]
