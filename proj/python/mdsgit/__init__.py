"""Exact GIT / Mori chamber decompositions of torus actions on affine space."""

from ._mdsgit import (
    DegenerateLinearization,
    DimensionMismatch,
    EmptySemistableLocus,
    Error,
    ValidationError,
    chambers,
    cone_from_generators,
    cox_weights,
    dual,
    factor_contraction,
    gale_dual,
    m0n,
    quotient_fan,
    run,
    saturated_kernel_basis,
    smith_normal_form,
    unstable_locus,
    validate_fan,
)

__all__ = [
    "DegenerateLinearization",
    "DimensionMismatch",
    "EmptySemistableLocus",
    "Error",
    "ValidationError",
    "chambers",
    "cone_from_generators",
    "cox_weights",
    "dual",
    "factor_contraction",
    "gale_dual",
    "m0n",
    "quotient_fan",
    "run",
    "saturated_kernel_basis",
    "smith_normal_form",
    "unstable_locus",
    "validate_fan",
]
