"""Concrete hyperelliptic curves: models, places, functions and automorphisms."""

from .automorphisms import (
    CurveAutomorphism,
    apply_automorphism,
    automorphism_validate,
    check_group,
    compose,
    divisor_image,
    group_closure,
    hyperelliptic_involution,
    identity,
    is_hyperelliptic_involution,
    is_invariant,
    order,
    place_image,
)
from .functions import FunctionRep
from .local import (
    evaluate,
    local_expansion,
    local_parameter,
    norm_valuation,
    principal_divisor,
    valuation,
)
from .model import HyperellipticModel, curve_validate, model_genus
from .places import (
    Divisor,
    Place,
    base_change_divisor,
    branch_places,
    infinity_divisor,
    place_from_id,
    places_over,
    pullback_point,
    ramification_of_x,
    rational_points,
)

__all__ = [
    "CurveAutomorphism",
    "Divisor",
    "FunctionRep",
    "HyperellipticModel",
    "Place",
    "apply_automorphism",
    "automorphism_validate",
    "base_change_divisor",
    "branch_places",
    "check_group",
    "compose",
    "curve_validate",
    "divisor_image",
    "evaluate",
    "group_closure",
    "hyperelliptic_involution",
    "identity",
    "infinity_divisor",
    "is_hyperelliptic_involution",
    "is_invariant",
    "local_expansion",
    "local_parameter",
    "model_genus",
    "norm_valuation",
    "order",
    "place_from_id",
    "place_image",
    "places_over",
    "principal_divisor",
    "pullback_point",
    "ramification_of_x",
    "rational_points",
    "valuation",
]
