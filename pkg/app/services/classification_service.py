"""
Classification Service - taxonomy of games and the interpolation spectrum
"""
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

import numpy as np

from app.core.config import Settings, settings as default_settings
from app.core.logger import get_logger
from app.domain.classification.value_objects import (
    ClassificationReport,
    GameLabel,
    LabelThresholds,
    SpectrumRecord,
    TrajectorySummary,
)
from app.domain.dynamics.services import integrate, recurrence
from app.domain.dynamics.value_objects import IntegratorConfig, TerminationReason, Trajectory
from app.domain.game.entities import DifferentialGame
from app.domain.game.services import (
    derivatives_for,
    interpolate_games,
    is_nonstrategic,
    jacobian_residuals,
)
from app.domain.game.value_objects import SamplerSpec, StrategyProfile
from app.domain.hodge.services import decompose, residuals
from app.domain.hodge.value_objects import DecompositionConfig, ResidualReport

from .game_field_service import GameFieldService

logger = get_logger(__name__)


def assign_label(
    nonstrategic: bool,
    sym_res: float,
    skew_res: float,
    analytic_div_max: float,
    grid_residuals: ResidualReport,
    thresholds: LabelThresholds,
) -> GameLabel:
    """
    Precedence: non-strategic, vector potential (hamiltonian when also
    skew), exact scalar potential, near vector potential, mixed

    A field that is both closed and divergence-free is harmonic; it is
    labelled vector potential and flagged as a scalar potential.
    """
    if nonstrategic:
        return GameLabel.NON_STRATEGIC
    if analytic_div_max <= thresholds.symbolic:
        if skew_res <= thresholds.symbolic:
            return GameLabel.HAMILTONIAN
        return GameLabel.VECTOR_POTENTIAL
    if sym_res <= thresholds.symbolic:
        return GameLabel.EXACT_SCALAR_POTENTIAL
    if (
        grid_residuals.near_vp_residual <= thresholds.grid
        and grid_residuals.div_residual > thresholds.grid
    ):
        return GameLabel.NEAR_VECTOR_POTENTIAL
    return GameLabel.MIXED


class ClassificationService:
    """Service for classifying games and sweeping interpolations"""

    def __init__(
        self,
        field_service: Optional[GameFieldService] = None,
        app_settings: Optional[Settings] = None,
    ):
        self.settings = app_settings or default_settings
        self.field_service = field_service or GameFieldService(self.settings)

    def classify(
        self,
        game: DifferentialGame,
        sampler: Optional[SamplerSpec] = None,
        resolution: Optional[int] = None,
        thresholds: Optional[LabelThresholds] = None,
        decomposition: Optional[DecompositionConfig] = None,
    ) -> ClassificationReport:
        """Label a game from symbolic residuals over samples and grid residuals of windowed Du"""
        sampler = sampler or SamplerSpec.from_settings(self.settings.sampler)
        resolution = resolution or self.settings.grid.resolution
        thresholds = thresholds or LabelThresholds.from_settings(self.settings.tolerances)
        decomposition = decomposition or DecompositionConfig.from_settings(self.settings)

        try:
            # 1. Symbolic tier
            nonstrategic = is_nonstrategic(game, sampler, thresholds.nonstrategic)
            jacobian_report = jacobian_residuals(game, sampler, decomposition.norm_guard)

            # 2. Grid tier
            grid = self.field_service.box_grid(game, sampler.low, sampler.high, resolution)
            field = self.field_service.windowed_gradient(game, grid)
            result = decompose(field, decomposition)
            grid_residuals = residuals(field, decomposition)

            # 3. Label
            label = assign_label(
                nonstrategic=nonstrategic.verdict,
                sym_res=jacobian_report.max_sym_res,
                skew_res=jacobian_report.max_skew_res,
                analytic_div_max=jacobian_report.max_abs_divergence,
                grid_residuals=grid_residuals,
                thresholds=thresholds,
            )
            report = ClassificationReport(
                game=game.name,
                label=label,
                hamiltonian=label is GameLabel.HAMILTONIAN,
                vector_potential=label in (GameLabel.HAMILTONIAN, GameLabel.VECTOR_POTENTIAL),
                scalar_potential=jacobian_report.max_sym_res <= thresholds.symbolic,
                nonstrategic_max_norm=nonstrategic.max_norm,
                sym_res=jacobian_report.max_sym_res,
                skew_res=jacobian_report.max_skew_res,
                analytic_div_max=jacobian_report.max_abs_divergence,
                symbolic_divergence_zero=derivatives_for(game).is_divergence_free(),
                grid_residuals=grid_residuals,
                energy_fractions=result.energy_fractions(),
                diagnostics=result.diagnostics,
                thresholds=thresholds,
                sampler=sampler.to_dict(),
                grid=grid.to_dict(),
            )
            logger.info(
                "Game classified",
                game=game.name,
                label=label.value,
                sym_res=report.sym_res,
                analytic_div_max=report.analytic_div_max,
            )
            return report
        except Exception as e:
            logger.error("Classification failed", game=game.name, error=str(e))
            raise

    def summarize_trajectory(self, game: DifferentialGame, trajectory: Trajectory) -> tuple:
        """(summary, recurrence return count) of one integration"""
        if trajectory.terminated_by is TerminationReason.ESCAPE:
            return TrajectorySummary.ESCAPED, None
        final_gradient = derivatives_for(game).gradient_at(trajectory.final_state[None, :])[0]
        if float(np.max(np.abs(final_gradient))) <= self.settings.tolerances.convergence:
            return TrajectorySummary.CONVERGED, None
        report = recurrence(
            trajectory,
            self.settings.recurrence.epsilon,
            self.settings.recurrence.t_min,
        )
        if report.verdict:
            return TrajectorySummary.RECURRENT, report.return_count
        return TrajectorySummary.BOUNDED, 0

    def _spectrum_point(
        self,
        g_a: DifferentialGame,
        g_b: DifferentialGame,
        gamma: float,
        x0: StrategyProfile,
        config: IntegratorConfig,
        sampler: SamplerSpec,
        resolution: int,
    ) -> SpectrumRecord:
        game = interpolate_games(g_a, g_b, gamma)
        classification = self.classify(game, sampler, resolution)
        trajectory = integrate(game, x0, config)
        summary, returns = self.summarize_trajectory(game, trajectory)
        return SpectrumRecord(
            gamma=gamma,
            classification=classification,
            summary=summary,
            final_norm=trajectory.final_norm,
            initial_state=x0.coordinates,
            recurrence_returns=returns,
        )

    def spectrum_experiment(
        self,
        g_a: DifferentialGame,
        g_b: DifferentialGame,
        gammas: Sequence[float],
        x0: StrategyProfile,
        config: Optional[IntegratorConfig] = None,
        sampler: Optional[SamplerSpec] = None,
        resolution: Optional[int] = None,
        max_workers: Optional[int] = None,
    ) -> List[SpectrumRecord]:
        """
        Classify and integrate the interpolated game for every gamma

        Records come back in gamma order whatever the completion order.
        """
        config = config or IntegratorConfig.from_settings(self.settings.integrator)
        sampler = sampler or SamplerSpec.from_settings(self.settings.sampler)
        resolution = resolution or self.settings.grid.resolution
        workers = max_workers or self.settings.max_workers
        g_a.require_same_structure(g_b)

        def run(gamma: float) -> SpectrumRecord:
            return self._spectrum_point(g_a, g_b, gamma, x0, config, sampler, resolution)

        if workers <= 1:
            records = [run(gamma) for gamma in gammas]
        else:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                records = list(pool.map(run, gammas))

        logger.info("Spectrum experiment finished", points=len(records), workers=workers)
        return records
