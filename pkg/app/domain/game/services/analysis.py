"""
Pointwise and sampled analysis of the simultaneous gradient
"""
from typing import Optional

import numpy as np

from app.core.config import settings
from app.domain.game.entities import DifferentialGame
from app.domain.game.value_objects import (
    JacobianResidualReport,
    JacobianSplit,
    NonstrategicReport,
    SamplerSpec,
    StrategyProfile,
)

from .derivatives import derivatives_for


def _point(game: DifferentialGame, profile: StrategyProfile) -> np.ndarray:
    if profile.dimension != game.dimension:
        raise ValueError(
            f"Profile has {profile.dimension} coordinates, game '{game.name}' has dimension {game.dimension}"
        )
    return profile.as_array()[None, :]


def gradient_at(game: DifferentialGame, profile: StrategyProfile) -> np.ndarray:
    return derivatives_for(game).gradient_at(_point(game, profile))[0]


def jacobian(
    game: DifferentialGame,
    profile: StrategyProfile,
    norm_guard: Optional[float] = None,
) -> JacobianSplit:
    """Exact Jacobian of Du at profile, split into symmetric and skew parts"""
    guard = norm_guard if norm_guard is not None else settings.tolerances.norm_guard
    J = derivatives_for(game).jacobian_at(_point(game, profile))[0]
    return JacobianSplit(J, norm_guard=guard)


def divergence(game: DifferentialGame, profile: StrategyProfile) -> float:
    """Div(Du) at profile; identical to the trace of ``jacobian``"""
    J = derivatives_for(game).jacobian_at(_point(game, profile))[0]
    return float(np.trace(J))


def ne_flatness_check(game: DifferentialGame, profile: StrategyProfile) -> float:
    """max over players m and owned coordinates i of |d^2 u_m / d(w_i^m)^2| at profile"""
    J = derivatives_for(game).jacobian_at(_point(game, profile))[0]
    return float(np.max(np.abs(np.diag(J))))


def is_nonstrategic(
    game: DifferentialGame,
    sampler: Optional[SamplerSpec] = None,
    tolerance: Optional[float] = None,
) -> NonstrategicReport:
    """Du vanishes on every sample within tolerance"""
    sampler = sampler or SamplerSpec.from_settings(settings.sampler)
    tolerance = tolerance if tolerance is not None else settings.tolerances.nonstrategic

    points = sampler.points(game.dimension)
    values = derivatives_for(game).gradient_at(points)
    max_norm = float(np.max(np.abs(values))) if values.size else 0.0
    return NonstrategicReport(
        max_norm=max_norm,
        verdict=max_norm <= tolerance,
        tolerance=tolerance,
        sampler=sampler.to_dict(),
    )


def jacobian_residuals(
    game: DifferentialGame,
    sampler: Optional[SamplerSpec] = None,
    norm_guard: Optional[float] = None,
) -> JacobianResidualReport:
    """Maxima of sym_res, skew_res and |Div(Du)| over the sample set"""
    sampler = sampler or SamplerSpec.from_settings(settings.sampler)
    guard = norm_guard if norm_guard is not None else settings.tolerances.norm_guard

    points = sampler.points(game.dimension)
    J = derivatives_for(game).jacobian_at(points)
    Jt = np.swapaxes(J, 1, 2)
    scale = np.maximum(np.linalg.norm(J, axis=(1, 2)), guard)
    sym_res = np.linalg.norm((J - Jt) / 2.0, axis=(1, 2)) / scale
    skew_res = np.linalg.norm((J + Jt) / 2.0, axis=(1, 2)) / scale
    div = np.trace(J, axis1=1, axis2=2)
    return JacobianResidualReport(
        max_sym_res=float(np.max(sym_res)),
        max_skew_res=float(np.max(skew_res)),
        max_abs_divergence=float(np.max(np.abs(div))),
        max_jacobian_norm=float(np.max(np.linalg.norm(J, axis=(1, 2)))),
        sampler=sampler.to_dict(),
    )
