"""Exact flop dynamics on a rank-2 divisor lattice.

The package models a family of threefolds, indexed by an integer n >= 3,
whose divisor lattice carries two involutions t1 and t2.  Their composite f
has an exact quadratic spectrum over sqrt(n^2 - 1); the library computes
intersection pairings, nef and movable cone membership, reduction of movable
classes to nef by flop words, the dynamical degree with its estimators, and a
primitivity checklist, all in exact arithmetic.
"""

from .chambers import ChamberWall, chamber_svg_text, chamber_walls, render_chamber_svg
from .cones import (BOUNDARY, INTERIOR, OUTSIDE, ConeMembership, FlopWord,
                    ReductionResult, eigenrays, movable_membership,
                    nef_membership, reduce_to_nef)
from .divisors import DivisorClass
from .dynamics import (DegreeRow, DegreeTable, RayRow, RayTrace,
                       degree_estimators, dyn_degree_exact, ray_convergence)
from .intersection import FamilyContext, ample_test_class, multidegree, pairing
from .lattice import (EigenData, LatticeAction, apply_power, eigen_data,
                      family_map, involution_matrix, is_irreducible_over_Q,
                      spectral_radius)
from .primitivity import (ALL_FIXED, VERDICT_INCONCLUSIVE, VERDICT_PRIMITIVE,
                          PrimitivityReport, SemiampleEvidence,
                          fixed_rational_vector, primitivity_report)
from .quadfield import QuadElem, is_perfect_square, quad_inverse, quad_sign, rational_sign

__version__ = "0.1.0"

__all__ = [
    "ALL_FIXED",
    "BOUNDARY",
    "ChamberWall",
    "ConeMembership",
    "DegreeRow",
    "DegreeTable",
    "DivisorClass",
    "EigenData",
    "FamilyContext",
    "FlopWord",
    "INTERIOR",
    "LatticeAction",
    "OUTSIDE",
    "PrimitivityReport",
    "QuadElem",
    "RayRow",
    "RayTrace",
    "ReductionResult",
    "SemiampleEvidence",
    "VERDICT_INCONCLUSIVE",
    "VERDICT_PRIMITIVE",
    "ample_test_class",
    "apply_power",
    "chamber_svg_text",
    "chamber_walls",
    "degree_estimators",
    "dyn_degree_exact",
    "eigen_data",
    "eigenrays",
    "family_map",
    "fixed_rational_vector",
    "involution_matrix",
    "is_irreducible_over_Q",
    "is_perfect_square",
    "movable_membership",
    "multidegree",
    "nef_membership",
    "pairing",
    "primitivity_report",
    "quad_inverse",
    "quad_sign",
    "rational_sign",
    "ray_convergence",
    "reduce_to_nef",
    "render_chamber_svg",
    "spectral_radius",
]
