from .analysis import (
    divergence,
    gradient_at,
    is_nonstrategic,
    jacobian,
    jacobian_residuals,
    ne_flatness_check,
)
from .derivatives import GameDerivatives, derivatives_for, simultaneous_gradient
from .equivalence import difference_game, strategically_equivalent
from .interpolation import interpolate_games
from .potential import reconstruct_exact_potential, verify_potential

__all__ = [
    "GameDerivatives",
    "derivatives_for",
    "difference_game",
    "divergence",
    "gradient_at",
    "is_nonstrategic",
    "interpolate_games",
    "jacobian",
    "jacobian_residuals",
    "ne_flatness_check",
    "reconstruct_exact_potential",
    "simultaneous_gradient",
    "strategically_equivalent",
    "verify_potential",
]
