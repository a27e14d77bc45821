"""Equivariant Riemann-Roch data for hyperelliptic curves over finite fields."""

from .algebra import FieldSpec, Matrix, Poly, field_make
from .config import RunConfig
from .criteria import (
    Verdict,
    divisor_verdict,
    faithful_polydiff,
    faithful_sufficient,
    trivial_action_iff,
    trivial_deg_2gm1,
    trivial_deg_ge_2g,
)
from .curve import (
    CurveAutomorphism,
    Divisor,
    FunctionRep,
    HyperellipticModel,
    Place,
    curve_validate,
    hyperelliptic_involution,
)
from .deformation import GroupRepresentation, check_duality, check_groups_hypothesis, deformation_dim, inv_coinv_dims
from .differentials import PolyDifferential, action_on_polydiff, basis_polydiff, crosscheck_mKX
from .goppa import GoppaCode, code_action, goppa_build, min_distance_bruteforce
from .ramification import BranchRecord, InvariantDivisorSpec, RamificationProfile, profile_from_curve
from .rrspace import RRBasis, action_on_rr, invariant_dim_concrete, invariant_dim_formula, invariant_dim_polydiff, rr_basis
from .verify import run_checks

__version__ = "0.1.0"

__all__ = [
    "BranchRecord",
    "CurveAutomorphism",
    "Divisor",
    "FieldSpec",
    "FunctionRep",
    "GoppaCode",
    "GroupRepresentation",
    "HyperellipticModel",
    "InvariantDivisorSpec",
    "Matrix",
    "Place",
    "Poly",
    "PolyDifferential",
    "RRBasis",
    "RamificationProfile",
    "RunConfig",
    "Verdict",
    "action_on_polydiff",
    "action_on_rr",
    "basis_polydiff",
    "check_duality",
    "check_groups_hypothesis",
    "code_action",
    "crosscheck_mKX",
    "curve_validate",
    "deformation_dim",
    "divisor_verdict",
    "faithful_polydiff",
    "faithful_sufficient",
    "field_make",
    "goppa_build",
    "hyperelliptic_involution",
    "inv_coinv_dims",
    "invariant_dim_concrete",
    "invariant_dim_formula",
    "invariant_dim_polydiff",
    "min_distance_bruteforce",
    "profile_from_curve",
    "rr_basis",
    "run_checks",
    "trivial_action_iff",
    "trivial_deg_2gm1",
    "trivial_deg_ge_2g",
]
