"""
Variational equation M' = J(x(t)) M along the flow

M is carried as Q R with Q orthonormal. After every accepted step the
propagated Q is refactored, its positive R diagonal is folded into the
running sum of log R_ii, and Q is reset to the new orthonormal factor.
ln det M(t) is that sum, so contracting directions never collapse the
columns of a stored matrix.
"""
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from app.core.exceptions import SingularMonodromyError
from app.core.logger import get_logger
from app.domain.dynamics.value_objects import (
    EnsembleVolumeReport,
    IntegratorConfig,
    TerminationReason,
)
from app.domain.game.entities import DifferentialGame
from app.domain.game.services import derivatives_for
from app.domain.game.value_objects import StrategyProfile

from .integrators import FlowIntegrator

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class MonodromyTrack:
    """
    Records of one co-integration

    ``log_dets`` comes from the variational equation, ``log_volumes`` from
    w' = tr J on the same steps.
    """
    times: np.ndarray
    log_dets: np.ndarray
    log_volumes: np.ndarray
    states: np.ndarray
    terminated_by: TerminationReason


class _Layout:
    """Slices of the flat state (x, Q, sum log R_ii, w)"""

    def __init__(self, n: int):
        self.n = n
        self.x = slice(0, n)
        self.q = slice(n, n + n * n)
        self.log_r = n + n * n
        self.w = n + n * n + 1
        self.size = n + n * n + 2

    def initial(self, x0: np.ndarray) -> np.ndarray:
        z = np.zeros(self.size)
        z[self.x] = x0
        z[self.q] = np.eye(self.n).ravel()
        return z


def _variational_system(game: DifferentialGame, layout: _Layout):
    derivatives = derivatives_for(game)
    n = layout.n
    gradient = derivatives.gradient_fn.at_state
    jacobian = derivatives.jacobian_fn.at_state

    def rhs(z: np.ndarray) -> np.ndarray:
        x = z[layout.x]
        Q = z[layout.q].reshape(n, n)
        J = jacobian(x).reshape(n, n)
        dz = np.zeros_like(z)
        dz[layout.x] = gradient(x)
        dz[layout.q] = (J @ Q).ravel()
        dz[layout.w] = np.trace(J)
        return dz

    return rhs


def _reorthonormalize(layout: _Layout):
    n = layout.n

    def post_step(z: np.ndarray, time: float) -> np.ndarray:
        Q, R = np.linalg.qr(z[layout.q].reshape(n, n))
        diagonal = np.diag(R)
        if not np.all(np.abs(diagonal) > 0.0):
            raise SingularMonodromyError(f"Monodromy matrix lost rank at t={time:.17g}")
        signs = np.sign(diagonal)
        Q = Q * signs
        # det Q = sign(det M); a continuous flow keeps it at +1
        if np.linalg.det(Q) <= 0.0:
            raise SingularMonodromyError(f"Monodromy matrix lost orientation at t={time:.17g}")
        z = z.copy()
        z[layout.q] = Q.ravel()
        z[layout.log_r] += float(np.sum(np.log(np.abs(diagonal))))
        return z

    return post_step


def monodromy_track(
    game: DifferentialGame,
    x0: StrategyProfile,
    config: Optional[IntegratorConfig] = None,
) -> MonodromyTrack:
    """Co-integrate state, monodromy and log-volume with the same method"""
    config = config or IntegratorConfig()
    layout = _Layout(game.dimension)
    integrator = FlowIntegrator(
        _variational_system(game, layout),
        config,
        game.dimension,
        post_step=_reorthonormalize(layout),
    )
    run = integrator.run(layout.initial(x0.as_array()))
    return MonodromyTrack(
        times=run.times,
        log_dets=run.states[:, layout.log_r].copy(),
        log_volumes=run.states[:, layout.w].copy(),
        states=run.states[:, layout.x].copy(),
        terminated_by=run.terminated_by,
    )


def monodromy_log_det(
    game: DifferentialGame,
    x0: StrategyProfile,
    config: Optional[IntegratorConfig] = None,
) -> np.ndarray:
    """ln det M(t) at the record times of the co-integrated flow"""
    return monodromy_track(game, x0, config).log_dets


def _hull_area(points: np.ndarray) -> Optional[float]:
    try:
        # in 2-D, ConvexHull.volume is the enclosed area
        return float(ConvexHull(points).volume)
    except (QhullError, ValueError):
        return None


def ensemble_volume(
    game: DifferentialGame,
    points: Sequence[Sequence[float]],
    config: Optional[IntegratorConfig] = None,
) -> EnsembleVolumeReport:
    """
    Volume change of a cloud of initial states

    ln det M(t_end) per point is the exact local volume ratio; hull areas are
    reported for two-dimensional games when no point escaped.
    """
    config = config or IntegratorConfig()
    log_dets = []
    finals = []
    escaped = 0
    for point in points:
        track = monodromy_track(game, StrategyProfile(tuple(point)), config)
        log_dets.append(float(track.log_dets[-1]))
        finals.append(tuple(float(v) for v in track.states[-1]))
        if track.terminated_by is TerminationReason.ESCAPE:
            escaped += 1

    start = np.asarray(points, dtype=float)
    hull_start = hull_end = None
    if game.dimension == 2 and escaped == 0 and len(finals) >= 3:
        hull_start = _hull_area(start)
        hull_end = _hull_area(np.asarray(finals))

    values = np.asarray(log_dets)
    report = EnsembleVolumeReport(
        t_end=config.t_end,
        log_dets=tuple(log_dets),
        mean_log_det=float(np.mean(values)) if values.size else 0.0,
        max_abs_log_det=float(np.max(np.abs(values))) if values.size else 0.0,
        escaped=escaped,
        hull_area_start=hull_start,
        hull_area_end=hull_end,
        final_states=finals,
    )
    logger.info(
        "Ensemble volume computed",
        game=game.name,
        points=len(log_dets),
        mean_log_det=report.mean_log_det,
        escaped=escaped,
    )
    return report
