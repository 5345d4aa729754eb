"""
Newton search for zeros of Du and their local-Nash diagnostics
"""
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from app.core.logger import get_logger
from app.domain.dynamics.value_objects import (
    CriticalPoint,
    CriticalPointSearch,
    PlayerHessianRange,
)
from app.domain.game.entities import DifferentialGame
from app.domain.game.services import derivatives_for
from app.domain.game.value_objects import SamplerSpec

logger = get_logger(__name__)

FD_JACOBIAN_STEP = 1e-7
STAGNATION = 1e-14
SINGULAR_CONDITION = 1e14
POLISH_ITER = 100
# roots may sit this far outside the seed box, relative to its width
BOX_SLACK = 1e-9


@dataclass(frozen=True)
class NewtonOptions:
    tol: float = 1e-12
    max_iter: int = 50
    fd_fallback: bool = True

    @classmethod
    def from_settings(cls, newton_settings) -> "NewtonOptions":
        return cls(
            tol=newton_settings.tol,
            max_iter=newton_settings.max_iter,
            fd_fallback=newton_settings.fd_fallback,
        )


def _fd_jacobian(gradient, x: np.ndarray) -> np.ndarray:
    n = x.size
    J = np.empty((n, n))
    for j in range(n):
        h = FD_JACOBIAN_STEP * (1.0 + abs(x[j]))
        step = np.zeros(n)
        step[j] = h
        J[:, j] = (gradient(x + step) - gradient(x - step)) / (2.0 * h)
    return J


def _newton_step(gradient, jacobian, x: np.ndarray, F: np.ndarray, options: NewtonOptions) -> Optional[np.ndarray]:
    n = x.size
    J = jacobian(x).reshape(n, n)
    if not np.all(np.isfinite(J)):
        if not options.fd_fallback:
            return None
        J = _fd_jacobian(gradient, x)
        if not np.all(np.isfinite(J)):
            return None
    try:
        if np.linalg.cond(J) > SINGULAR_CONDITION:
            raise np.linalg.LinAlgError
        return np.linalg.solve(J, -F)
    except np.linalg.LinAlgError:
        # singular Jacobian: minimum-norm least-squares step
        return np.linalg.lstsq(J, -F, rcond=None)[0]


def _polish(gradient, jacobian, x: np.ndarray, F: np.ndarray, options: NewtonOptions) -> np.ndarray:
    """
    Keep stepping past the residual tolerance while |Du| does not grow

    At a degenerate root Du vanishes to higher order, so |Du| <= tol is
    reached far from the root and Newton only converges linearly.
    """
    residual = float(np.max(np.abs(F)))
    for _ in range(POLISH_ITER):
        if residual == 0.0:
            break
        delta = _newton_step(gradient, jacobian, x, F, options)
        if delta is None:
            break
        candidate = x + delta
        F_candidate = gradient(candidate)
        if not np.all(np.isfinite(F_candidate)):
            break
        candidate_residual = float(np.max(np.abs(F_candidate)))
        if candidate_residual > residual:
            break
        x, F, residual = candidate, F_candidate, candidate_residual
        if float(np.linalg.norm(delta)) <= STAGNATION * (1.0 + float(np.linalg.norm(x))):
            break
    return x


def newton_solve(game: DifferentialGame, seed: np.ndarray, options: NewtonOptions) -> Tuple[np.ndarray, bool]:
    """Newton iteration on Du(x) = 0 from one seed; returns (x, converged)"""
    derivatives = derivatives_for(game)
    gradient = derivatives.gradient_fn.at_state
    jacobian = derivatives.jacobian_fn.at_state
    x = np.asarray(seed, dtype=float).copy()

    with np.errstate(all="ignore"):
        for _ in range(options.max_iter):
            F = gradient(x)
            if not np.all(np.isfinite(F)):
                return x, False
            if float(np.max(np.abs(F))) <= options.tol:
                return _polish(gradient, jacobian, x, F, options), True

            delta = _newton_step(gradient, jacobian, x, F, options)
            if delta is None:
                return x, False
            x = x + delta
            if float(np.linalg.norm(delta)) <= STAGNATION * (1.0 + float(np.linalg.norm(x))):
                break

        F = gradient(x)
    converged = bool(np.all(np.isfinite(F)) and float(np.max(np.abs(F))) <= options.tol)
    return x, converged


def annotate_critical_point(game: DifferentialGame, location: np.ndarray, nsd_tolerance: float = 1e-8) -> CriticalPoint:
    """Own-block Hessian eigenvalue ranges, local-NE candidacy and flatness at a root"""
    derivatives = derivatives_for(game)
    n = game.dimension
    point = location[None, :]
    J = derivatives.jacobian_at(point)[0]
    F = derivatives.gradient_at(point)[0]

    ranges = []
    for player, block in zip(game.players, game.player_slices()):
        hessian = J[block, block]
        eigenvalues = np.linalg.eigvalsh((hessian + hessian.T) / 2.0)
        ranges.append(
            PlayerHessianRange(
                player=player.name,
                min_eigenvalue=float(eigenvalues[0]),
                max_eigenvalue=float(eigenvalues[-1]),
            )
        )
    return CriticalPoint(
        location=tuple(float(v) for v in location[:n]),
        gradient_norm=float(np.max(np.abs(F))) if F.size else 0.0,
        hessian_ranges=tuple(ranges),
        local_ne_candidate=all(r.max_eigenvalue <= nsd_tolerance for r in ranges),
        flatness=float(np.max(np.abs(np.diag(J)))),
    )


def find_critical_points(
    game: DifferentialGame,
    box: Optional[SamplerSpec] = None,
    options: Optional[NewtonOptions] = None,
    dedup_tolerance: float = 1e-6,
    nsd_tolerance: float = 1e-8,
) -> CriticalPointSearch:
    """
    Roots of Du from deterministic seeds in the box

    Seeds are the box sampler's points (its count is the number of seeds).
    Converged roots closer than dedup_tolerance are merged; non-converged
    seeds are dropped and counted. Roots Newton reached outside the box are
    dropped and counted as outside_box.
    """
    box = box or SamplerSpec(count=64)
    options = options or NewtonOptions()
    seeds = box.points(game.dimension)
    slack = BOX_SLACK * (box.high - box.low)

    roots: List[np.ndarray] = []
    converged = 0
    outside = 0
    for seed in seeds:
        x, ok = newton_solve(game, seed, options)
        if not ok:
            continue
        converged += 1
        if np.any(x < box.low - slack) or np.any(x > box.high + slack):
            outside += 1
            continue
        if all(np.linalg.norm(x - r) > dedup_tolerance for r in roots):
            roots.append(x)

    points = tuple(annotate_critical_point(game, r, nsd_tolerance) for r in roots)
    logger.info(
        "Critical point search finished",
        game=game.name,
        seeds=len(seeds),
        converged=converged,
        outside_box=outside,
        roots=len(points),
    )
    return CriticalPointSearch(
        points=points,
        seeds=len(seeds),
        converged_seeds=converged,
        non_converged_seeds=len(seeds) - converged,
        tolerance=options.tol,
        outside_box=outside,
    )
