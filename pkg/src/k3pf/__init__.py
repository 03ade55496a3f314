"""Exact Picard-Fuchs equations for symmetric anticanonical K3 pencils.

Given a reflexive polytope whose rotation group is large enough to cut the
anticanonical linear system down to one parameter, this package builds the
symmetric pencil in Cox coordinates, computes its Picard-Fuchs operator by
graded Jacobian-ideal reduction, and analyzes the result (symmetric square
root, projective normal form, independent period-series verification).
Everything runs in exact rational arithmetic.
"""

from .errors import K3PFError
from .intpoly import IntPoly, parse_poly
from .ratfunc import RationalFunction, rf, rf_normalize, parse_rf
from .linalg import RFMatrix, rf_linear_solve, rf_nullspace, rf_rank
from .lattice import (LatticeAutomorphism, LatticePolytope, OrbitPartition,
                      automorphism_group, orbits, reflexive_slices)
from .toric import (CoxGrading, DegreeClass, FamilySpec, GradedPolynomial,
                    build_family, check_invariance, cox_grading, rank_bound)
from .griffiths_dwork import (MembershipWitness, PicardFuchsResult,
                              RationalForm, derivative_form, ideal_membership,
                              jacobian_partials, picard_fuchs,
                              reduce_pole_order)
from .ode import (DifferentialOperator, local_series_solutions,
                  projective_normal_form, symmetric_square,
                  symmetric_square_root)
from .series import (TLaurentSeries, annihilates, constant_terms,
                     principal_period_series)
from . import shapes

__version__ = "0.1.0"

__all__ = [
    "K3PFError", "IntPoly", "parse_poly", "RationalFunction", "rf",
    "rf_normalize", "parse_rf", "RFMatrix", "rf_linear_solve", "rf_nullspace",
    "rf_rank", "LatticeAutomorphism", "LatticePolytope", "OrbitPartition",
    "automorphism_group", "orbits", "reflexive_slices", "CoxGrading",
    "DegreeClass", "FamilySpec", "GradedPolynomial", "build_family",
    "check_invariance", "cox_grading", "rank_bound", "MembershipWitness",
    "PicardFuchsResult", "RationalForm", "derivative_form",
    "ideal_membership", "jacobian_partials", "picard_fuchs",
    "reduce_pole_order", "DifferentialOperator", "local_series_solutions",
    "projective_normal_form", "symmetric_square", "symmetric_square_root",
    "TLaurentSeries", "annihilates", "constant_terms",
    "principal_period_series", "shapes",
]
