"""
Exact potential checks and reconstruction
"""
import warnings
from typing import Optional, Sequence

import numpy as np
from scipy import integrate

from app.core.config import settings
from app.core.exceptions import GameSpecError, PreconditionFailedError, QuadratureError
from app.core.logger import get_logger
from app.domain.expr.entities import Expr
from app.domain.expr.services import compile_exprs
from app.domain.game.entities import DifferentialGame
from app.domain.game.value_objects import (
    PotentialCheckReport,
    ReconstructionReport,
    SamplerSpec,
)

from .analysis import jacobian_residuals
from .derivatives import derivatives_for

logger = get_logger(__name__)

QUAD_ABS_TOL = 1e-10
QUAD_REL_TOL = 1e-12
FD_STEP = 1e-5


def verify_potential(
    game: DifferentialGame,
    phi: Expr,
    alpha: Optional[Sequence[float]] = None,
    sampler: Optional[SamplerSpec] = None,
    tolerance: Optional[float] = None,
) -> PotentialCheckReport:
    """
    Weighted potential residual over sampled unilateral deviations

    For each sample (w', w'') and each player i, compares the change of phi
    with alpha_i times the change of u_i when player i alone moves from its
    block of w' to its block of w''.
    """
    sampler = sampler or SamplerSpec.from_settings(settings.sampler)
    tolerance = tolerance if tolerance is not None else settings.tolerances.potential
    weights = tuple(float(a) for a in (alpha if alpha is not None else [1.0] * game.player_count))
    if len(weights) != game.player_count:
        raise GameSpecError(f"Expected {game.player_count} potential weights, got {len(weights)}")
    if any(a <= 0.0 for a in weights):
        raise GameSpecError(f"Potential weights must be positive, got {list(weights)}")

    phi_fn = compile_exprs([phi], game.variables)
    derivatives = derivatives_for(game)
    first, second = sampler.point_pairs(game.dimension)

    phi_first = phi_fn.at_points(first)[:, 0]
    u_first = derivatives.utilities_at(first)

    max_residual = 0.0
    for m, block in enumerate(game.player_slices()):
        moved = first.copy()
        moved[:, block] = second[:, block]
        phi_moved = phi_fn.at_points(moved)[:, 0]
        u_moved = derivatives.utilities_at(moved)[:, m]
        residual = np.abs((phi_first - phi_moved) - weights[m] * (u_first[:, m] - u_moved))
        max_residual = max(max_residual, float(np.max(residual)))

    return PotentialCheckReport(
        max_residual=max_residual,
        verdict=max_residual <= tolerance,
        tolerance=tolerance,
        alpha=weights,
        sampler=sampler.to_dict(),
    )


def reconstruct_exact_potential(
    game: DifferentialGame,
    sampler: Optional[SamplerSpec] = None,
    closed_tolerance: Optional[float] = None,
) -> ReconstructionReport:
    """
    Potential of a closed Du as the radial line integral from the origin

        phi(w) = int_0^1 Du(t w) . w dt

    Raises:
        PreconditionFailedError: Du is not closed on the samples
        QuadratureError: adaptive quadrature did not reach its tolerance
    """
    sampler = sampler or SamplerSpec.from_settings(settings.sampler)
    closed_tolerance = (
        closed_tolerance if closed_tolerance is not None else settings.tolerances.closed
    )

    # 1. Closedness precondition
    residuals = jacobian_residuals(game, sampler)
    if residuals.max_sym_res > closed_tolerance:
        raise PreconditionFailedError(
            f"Du of '{game.name}' is not closed: sym_res {residuals.max_sym_res:.3e} "
            f"exceeds {closed_tolerance:.1e}"
        )

    gradient_fn = derivatives_for(game).gradient_fn

    def integrand(t: float, w: np.ndarray) -> float:
        with np.errstate(all="ignore"):
            return float(np.dot(gradient_fn.raw(list(t * w)), w))

    def potential(point) -> float:
        w = np.asarray(point, dtype=float)
        with warnings.catch_warnings():
            warnings.simplefilter("error", integrate.IntegrationWarning)
            try:
                value, _ = integrate.quad(
                    integrand, 0.0, 1.0, args=(w,), epsabs=QUAD_ABS_TOL, epsrel=QUAD_REL_TOL, limit=200
                )
            except integrate.IntegrationWarning as e:
                raise QuadratureError(f"Line integral did not converge at {w.tolist()}: {e}") from e
        if not np.isfinite(value):
            raise QuadratureError(f"Line integral is not finite at {w.tolist()}")
        return float(value)

    # 2. Gradient residual by central differences
    points = sampler.points(game.dimension)
    expected = derivatives_for(game).gradient_at(points)
    per_point = []
    for p, du in zip(points, expected):
        grad = np.empty(game.dimension)
        for k in range(game.dimension):
            step = np.zeros(game.dimension)
            step[k] = FD_STEP
            grad[k] = (potential(p + step) - potential(p - step)) / (2.0 * FD_STEP)
        per_point.append(float(np.max(np.abs(grad - du))))

    gradient_residual = max(per_point) if per_point else 0.0
    logger.info(
        "Reconstructed exact potential",
        game=game.name,
        gradient_residual=gradient_residual,
        samples=len(per_point),
    )
    return ReconstructionReport(
        potential=potential,
        gradient_residual=gradient_residual,
        max_sym_res=residuals.max_sym_res,
        step=FD_STEP,
        sampler=sampler.to_dict(),
        residuals=per_point,
    )
