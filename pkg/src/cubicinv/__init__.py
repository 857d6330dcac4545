"""Invariants, covariants and contravariants of cubic surfaces in exact arithmetic."""

__version__ = "0.1.0"

from .arith import (DUAL, PRIMAL, TERNARY, RatMatrix, SparsePoly, VarSpace, act_dual, act_primal,
                    evaluate, monomial_basis, partial_derivative, poly_add, poly_mul, solve_exact)
from .differential import (apply_contravariant_to_covariant, apply_covariant_to_contravariant,
                           hessian)
from .forms import GradedForm
from .invariants import (InvariantVector, LinearCovariants, SurfaceComputation, Verdict,
                         all_invariants, clebsch_salmon_invariants, equivalent_over_closure,
                         has_automorphism_certificate, invariant_I100, linear_covariants)
from .pentahedral import (PentahedralCoeffs, cross_check, expand_pentahedral, salmon_invariants,
                          salmon_linear_covariants)
from .textform import format_poly, parse_poly
from .transfer import clebsch_S, clebsch_T, dual_surface, phi_inverse, restrict_to_plane, transfer
from .transvection import aronhold_S, aronhold_T, discriminant_ternary
