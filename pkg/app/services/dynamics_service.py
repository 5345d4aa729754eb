"""
Dynamics Service - gradient-flow experiments on a game
"""
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from app.core.config import Settings, settings as default_settings
from app.core.exceptions import ConvergenceError, UsageError
from app.core.logger import get_logger
from app.domain.dynamics.services import (
    NewtonOptions,
    conserved_drift,
    conserved_track,
    ensemble_volume,
    find_critical_points,
    integrate,
    monodromy_track,
    recurrence,
    utility_track,
)
from app.domain.dynamics.value_objects import (
    CriticalPointSearch,
    EnsembleVolumeReport,
    IntegratorConfig,
    RecurrenceReport,
    Trajectory,
)
from app.domain.expr.entities import Expr
from app.domain.expr.services import parse, render
from app.domain.game.entities import DifferentialGame
from app.domain.game.value_objects import SamplerSpec, StrategyProfile

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class SimulationResult:
    """One integration plus the series requested alongside it"""
    trajectory: Trajectory
    config: IntegratorConfig
    conserved: Optional[np.ndarray] = None
    conserved_expr: Optional[Expr] = None
    utilities: Dict[str, np.ndarray] = field(default_factory=dict)

    @property
    def conserved_drift(self) -> Optional[float]:
        if self.conserved is None:
            return None
        return float(np.max(np.abs(self.conserved - self.conserved[0])))

    def to_dict(self) -> dict:
        data = self.trajectory.summary()
        data["integrator"] = self.config.to_dict()
        data["initial_state"] = self.trajectory.initial_state.tolist()
        data["final_state"] = self.trajectory.final_state.tolist()
        data["final_log_volume"] = float(self.trajectory.log_volume[-1])
        if self.conserved_expr is not None:
            data["conserved"] = render(self.conserved_expr)
            data["conserved_drift"] = self.conserved_drift
        if self.utilities:
            data["utility_players"] = list(self.utilities)
        return data


@dataclass(frozen=True)
class LiouvilleCheck:
    """ln det M(t) against w(t) along one trajectory"""
    max_discrepancy: float
    final_log_det: float
    final_log_volume: float
    records: int

    def to_dict(self) -> dict:
        return {
            "max_discrepancy": self.max_discrepancy,
            "final_log_det": self.final_log_det,
            "final_log_volume": self.final_log_volume,
            "records": self.records,
        }


class DynamicsService:
    """Service for integrations, recurrence, critical points and ensembles"""

    def __init__(self, app_settings: Optional[Settings] = None):
        self.settings = app_settings or default_settings

    def integrator_config(self, **overrides) -> IntegratorConfig:
        """Integrator settings with explicit values taking precedence"""
        try:
            return IntegratorConfig.from_settings(self.settings.integrator, **overrides)
        except ValueError as e:
            raise UsageError(str(e)) from e

    def initial_state(self, game: DifferentialGame, values: Sequence[float]) -> StrategyProfile:
        if len(values) != game.dimension:
            raise UsageError(
                f"Initial state has {len(values)} coordinates, game '{game.name}' has dimension {game.dimension}"
            )
        return StrategyProfile.for_game(game, values)

    def simulate(
        self,
        game: DifferentialGame,
        x0: StrategyProfile,
        config: Optional[IntegratorConfig] = None,
        conserved: Optional[str] = None,
        utilities: bool = False,
    ) -> SimulationResult:
        """Integrate the flow; optionally track a conserved quantity and utilities"""
        config = config or self.integrator_config()
        quantity = parse(conserved, set(game.variables)) if conserved else None

        trajectory = integrate(game, x0, config)
        logger.info(
            "Integration finished",
            game=game.name,
            method=config.method.value,
            steps=trajectory.steps,
            terminated_by=trajectory.terminated_by.value,
        )

        result = SimulationResult(
            trajectory=trajectory,
            config=config,
            conserved=conserved_track(trajectory, quantity) if quantity is not None else None,
            conserved_expr=quantity,
            utilities=utility_track(game, trajectory) if utilities else {},
        )
        if quantity is not None:
            logger.info("Conserved quantity tracked", drift=conserved_drift(trajectory, quantity))
        return result

    def recurrence(
        self,
        game: DifferentialGame,
        x0: StrategyProfile,
        epsilon: Optional[float] = None,
        t_min: Optional[float] = None,
        config: Optional[IntegratorConfig] = None,
    ) -> Tuple[Trajectory, RecurrenceReport]:
        epsilon = epsilon if epsilon is not None else self.settings.recurrence.epsilon
        t_min = t_min if t_min is not None else self.settings.recurrence.t_min
        if not epsilon > 0.0:
            raise UsageError(f"--eps must be positive, got {epsilon}")
        if t_min < 0.0:
            raise UsageError(f"--t-min must be non-negative, got {t_min}")

        trajectory = integrate(game, x0, config or self.integrator_config())
        report = recurrence(trajectory, epsilon, t_min)
        logger.info(
            "Recurrence checked",
            game=game.name,
            returns=report.return_count,
            min_distance=report.min_distance_after_t_min,
        )
        return trajectory, report

    def critical_points(
        self,
        game: DifferentialGame,
        seeds: Optional[int] = None,
        low: Optional[float] = None,
        high: Optional[float] = None,
        require_root: bool = True,
    ) -> CriticalPointSearch:
        """
        Newton search from deterministic seeds in the sampling box

        Raises:
            ConvergenceError: no root was found inside the box and require_root is set
        """
        sampler_settings = self.settings.sampler
        box = SamplerSpec(
            low=sampler_settings.box_low if low is None else low,
            high=sampler_settings.box_high if high is None else high,
            count=seeds or self.settings.newton.seeds,
            seed=sampler_settings.seed,
        )
        search = find_critical_points(
            game,
            box,
            NewtonOptions.from_settings(self.settings.newton),
            dedup_tolerance=self.settings.tolerances.dedup,
            nsd_tolerance=self.settings.tolerances.nsd,
        )
        if require_root and not search.points:
            if search.converged_seeds:
                raise ConvergenceError(
                    f"All {search.converged_seeds} roots Newton found lie outside [{box.low}, {box.high}]"
                )
            raise ConvergenceError(f"Newton did not converge from any of {search.seeds} seeds")
        return search

    def ensemble(
        self,
        game: DifferentialGame,
        center: Sequence[float],
        radius: float,
        count: int,
        config: Optional[IntegratorConfig] = None,
    ) -> EnsembleVolumeReport:
        """Volume change of a low-discrepancy cloud in the cube of half-width radius around center"""
        if len(center) != game.dimension:
            raise UsageError(
                f"Center has {len(center)} coordinates, game '{game.name}' has dimension {game.dimension}"
            )
        if not radius > 0.0:
            raise UsageError(f"--radius must be positive, got {radius}")
        if count < 1:
            raise UsageError(f"--points must be positive, got {count}")

        cloud = SamplerSpec(low=-radius, high=radius, count=count, seed=self.settings.sampler.seed)
        points = cloud.points(game.dimension) + np.asarray(center, dtype=float)
        return ensemble_volume(game, points.tolist(), config or self.integrator_config())

    def liouville_check(
        self,
        game: DifferentialGame,
        x0: StrategyProfile,
        config: Optional[IntegratorConfig] = None,
    ) -> LiouvilleCheck:
        """
        Compare ln det M with the integrated divergence at every record

        Both come from one co-integration, so records share their times
        under adaptive stepping too. The discrepancy is relative,
        |ln det M - w| / (1 + |w|).
        """
        config = config or self.integrator_config()
        track = monodromy_track(game, x0, config)
        records = track.times.size
        w = track.log_volumes
        log_dets = track.log_dets
        discrepancy = np.abs(log_dets - w) / (1.0 + np.abs(w))
        return LiouvilleCheck(
            max_discrepancy=float(np.max(discrepancy)),
            final_log_det=float(log_dets[-1]),
            final_log_volume=float(w[-1]),
            records=int(records),
        )
