"""Exact computations with associated forms of hypersurfaces."""

from .apolarity import Functional, inverse_system_from_functional, pairing, perp, perp_dual, polar_apply
from .artinian import (
    GradedIdeal,
    a_gr,
    associated_form,
    associated_form_sequence,
    gradient_point,
    hilbert_function,
    in_w_nd,
    is_regular_sequence,
    macaulay_inverse_system,
    normalize,
    projectively_equal,
)
from .errors import AssocFormError, DomainError, StructuralError
from .geometry import ProjectivePoint, is_smooth, multiplicity_at, veronese_multiplicity_check, verify_zk_membership
from .git_stability import OneParamSubgroup, ds_kernel, lambda_limit, limit_subspace, torus_semistable
from .poly_core import D, S, GradedSubspace, HomogeneousForm, LinearChange, apply_linear_change, format_form, parse_form, span

__version__ = "0.1.0"

__all__ = [
    "Functional",
    "inverse_system_from_functional",
    "pairing",
    "perp",
    "perp_dual",
    "polar_apply",
    "GradedIdeal",
    "a_gr",
    "associated_form",
    "associated_form_sequence",
    "gradient_point",
    "hilbert_function",
    "in_w_nd",
    "is_regular_sequence",
    "macaulay_inverse_system",
    "normalize",
    "projectively_equal",
    "AssocFormError",
    "DomainError",
    "StructuralError",
    "ProjectivePoint",
    "is_smooth",
    "multiplicity_at",
    "veronese_multiplicity_check",
    "verify_zk_membership",
    "OneParamSubgroup",
    "ds_kernel",
    "lambda_limit",
    "limit_subspace",
    "torus_semistable",
    "D",
    "S",
    "GradedSubspace",
    "HomogeneousForm",
    "LinearChange",
    "apply_linear_change",
    "format_form",
    "parse_form",
    "span",
]
