"""
Game Analysis Service - the invariant suite run by ``check``
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, List, Optional, Tuple

import numpy as np

from app.core.config import Settings, settings as default_settings
from app.core.exceptions import HodgeGamesError
from app.core.logger import get_logger
from app.domain.expr.services import compile_exprs, parse, render
from app.domain.game.entities import DifferentialGame
from app.domain.game.services import (
    derivatives_for,
    jacobian_residuals,
    reconstruct_exact_potential,
)
from app.domain.game.value_objects import SamplerSpec, StrategyProfile
from app.domain.grid.services import d1_grid, d2_grid, inner1, inner2, norm0, norm2
from app.domain.grid.services.operators import DerivativeScheme
from app.domain.hodge.services import decompose
from app.domain.hodge.value_objects import DecompositionConfig, ZeroModePolicy

from .dynamics_service import DynamicsService
from .game_field_service import GameFieldService

logger = get_logger(__name__)

FD_STEP = 1e-6


class CheckStatus(str, Enum):
    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"
    ERROR = "error"


@dataclass(frozen=True)
class InvariantCheck:
    name: str
    status: CheckStatus
    value: Optional[float] = None
    threshold: Optional[float] = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status in (CheckStatus.PASSED, CheckStatus.SKIPPED)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status.value,
            "value": self.value,
            "threshold": self.threshold,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class InvariantSuiteReport:
    game: str
    checks: List[InvariantCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> List[InvariantCheck]:
        return [c for c in self.checks if not c.ok]

    def to_dict(self) -> dict:
        return {
            "game": self.game,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def _bounded(name: str, value: float, threshold: float, detail: str = "") -> InvariantCheck:
    status = CheckStatus.PASSED if value <= threshold else CheckStatus.FAILED
    return InvariantCheck(name=name, status=status, value=float(value), threshold=threshold, detail=detail)


def _skipped(name: str, detail: str) -> InvariantCheck:
    return InvariantCheck(name=name, status=CheckStatus.SKIPPED, detail=detail)


class GameAnalysisService:
    """Service for running every identity the toolkit guarantees on one game"""

    def __init__(
        self,
        field_service: Optional[GameFieldService] = None,
        dynamics_service: Optional[DynamicsService] = None,
        app_settings: Optional[Settings] = None,
    ):
        self.settings = app_settings or default_settings
        self.field_service = field_service or GameFieldService(self.settings)
        self.dynamics_service = dynamics_service or DynamicsService(self.settings)

    def check(
        self,
        game: DifferentialGame,
        sampler: Optional[SamplerSpec] = None,
        resolution: Optional[int] = None,
        t_end: float = 5.0,
    ) -> InvariantSuiteReport:
        """
        Run the invariant suite

        Each check is independent; an exception inside one check is
        recorded as an error for that check and the suite continues.
        """
        sampler = sampler or SamplerSpec.from_settings(self.settings.sampler)
        resolution = resolution or self.settings.grid.resolution

        groups: List[Tuple[str, Callable[[], List[InvariantCheck]]]] = [
            ("expr", lambda: self._expression_checks(game, sampler)),
            ("game.jacobian", lambda: self._jacobian_checks(game, sampler)),
            ("game.potential", lambda: self._potential_checks(game, sampler)),
            ("grid", lambda: self._grid_checks(game, sampler, resolution)),
            ("dynamics.flow", lambda: self._flow_checks(game, sampler, t_end)),
            ("dynamics.flatness", lambda: self._flatness_checks(game, sampler)),
        ]
        checks: List[InvariantCheck] = []
        for name, run in groups:
            try:
                checks.extend(run())
            except HodgeGamesError as e:
                checks.append(InvariantCheck(name=name, status=CheckStatus.ERROR, detail=str(e)))
                logger.warning("Invariant check raised", game=game.name, error=str(e))

        report = InvariantSuiteReport(game=game.name, checks=checks)
        logger.info(
            "Invariant suite finished",
            game=game.name,
            passed=report.passed,
            failures=[c.name for c in report.failures],
        )
        return report

    # 1. Expression layer

    def _expression_checks(self, game: DifferentialGame, sampler: SamplerSpec) -> List[InvariantCheck]:
        points = sampler.points(game.dimension)
        derivatives = derivatives_for(game)
        utilities = derivatives.utilities_at(points)

        # render then parse must give back the same function
        reparsed = [parse(render(u), set(game.variables)) for u in game.utilities]
        again = compile_exprs(reparsed, game.variables).at_points(points)
        roundtrip = float(np.max(np.abs(again - utilities) / (1.0 + np.abs(utilities))))

        # Du against central differences of the utilities, coordinate by coordinate
        gradient = derivatives.gradient_at(points)
        owners = game.owner_of()
        worst = 0.0
        for k in range(game.dimension):
            shift = np.zeros(game.dimension)
            shift[k] = FD_STEP
            forward = derivatives.utilities_at(points + shift)[:, owners[k]]
            backward = derivatives.utilities_at(points - shift)[:, owners[k]]
            fd = (forward - backward) / (2.0 * FD_STEP)
            worst = max(worst, float(np.max(np.abs(fd - gradient[:, k]) / (1.0 + np.abs(gradient[:, k])))))

        return [
            _bounded("expr.render_parse_roundtrip", roundtrip, 1e-12),
            _bounded("game.gradient_matches_finite_difference", worst, 1e-5),
        ]

    # 2. Jacobian split

    def _jacobian_checks(self, game: DifferentialGame, sampler: SamplerSpec) -> List[InvariantCheck]:
        points = sampler.points(game.dimension)
        derivatives = derivatives_for(game)
        J = derivatives.jacobian_at(points)
        divergence = compile_exprs([derivatives.divergence], game.variables).at_points(points)[:, 0]
        trace = np.trace(J, axis1=1, axis2=2)
        trace_gap = float(np.max(np.abs(divergence - trace) / (1.0 + np.abs(trace))))

        report = jacobian_residuals(game, sampler)
        checks = [_bounded("game.divergence_is_jacobian_trace", trace_gap, 1e-12)]
        if report.max_skew_res <= 1e-10:
            checks.append(
                _bounded(
                    "game.hamiltonian_is_vector_potential",
                    report.max_abs_divergence,
                    self.settings.tolerances.label_symbolic,
                )
            )
        else:
            checks.append(_skipped("game.hamiltonian_is_vector_potential", "Jacobian is not skew"))
        return checks

    # 3. Exact potential

    def _potential_checks(self, game: DifferentialGame, sampler: SamplerSpec) -> List[InvariantCheck]:
        name = "game.exact_potential_reconstruction"
        report = jacobian_residuals(game, sampler)
        if report.max_sym_res > self.settings.tolerances.closed:
            return [_skipped(name, "Du is not closed")]
        small = SamplerSpec(low=sampler.low, high=sampler.high, count=min(sampler.count, 16), seed=sampler.seed)
        reconstruction = reconstruct_exact_potential(game, small)
        return [_bounded(name, reconstruction.gradient_residual, 1e-6)]

    # 4. Grid calculus and decomposition

    def _grid_checks(self, game: DifferentialGame, sampler: SamplerSpec, resolution: int) -> List[InvariantCheck]:
        grid = self.field_service.box_grid(game, sampler.low, sampler.high, resolution)
        X = self.field_service.windowed_gradient(game, grid)
        scheme = DerivativeScheme.SPECTRAL
        guard = self.settings.tolerances.norm_guard

        potential = decompose(X, DecompositionConfig(ZeroModePolicy.TO_POTENTIAL, scheme, guard))
        vector = decompose(X, DecompositionConfig(ZeroModePolicy.TO_VECTOR, scheme, guard))
        diagnostics = potential.diagnostics
        fractions = potential.energy_fractions()

        phi = potential.phi
        closedness = norm2(d2_grid(d1_grid(phi, scheme), scheme)) / max(norm0(phi), guard)
        curl = d2_grid(X, scheme)
        bound_gap = inner2(curl, curl) - 4.0 * inner1(X, X)
        policy_gap = float(
            np.max(np.abs(potential.x_p_oscillatory.stack() - vector.x_p_oscillatory.stack()))
        )

        return [
            _bounded("grid.exact_is_closed", closedness, 1e-10),
            _bounded("grid.d2_bounded_by_h1", bound_gap, 1e-9),
            _bounded("hodge.reconstruction", diagnostics.reconstruction_error, 1e-12),
            _bounded("hodge.potential_part_curl_free", diagnostics.curl_residual_P, 1e-10),
            _bounded("hodge.vector_part_divergence_free", diagnostics.div_residual_V, 1e-10),
            _bounded("hodge.orthogonality_l2", diagnostics.orthogonality_L2, 1e-10),
            _bounded("hodge.orthogonality_h1", diagnostics.orthogonality_H1, 1e-10),
            _bounded("hodge.energy_fractions_sum", abs(fractions.total - 1.0), 1e-9),
            _bounded("hodge.zero_mode_policies_agree", policy_gap, 0.0),
        ]

    # 5. Flow

    def _flow_checks(self, game: DifferentialGame, sampler: SamplerSpec, t_end: float) -> List[InvariantCheck]:
        x0 = StrategyProfile(tuple(float(v) for v in sampler.points(game.dimension)[0]))
        config = self.dynamics_service.integrator_config(t_end=t_end)
        check = self.dynamics_service.liouville_check(game, x0, config)
        return [
            _bounded(
                "dynamics.liouville_log_volume",
                check.max_discrepancy,
                1e-5,
                detail=f"from {list(x0.coordinates)} to t={t_end:g}",
            )
        ]

    # 6. Nash flatness for divergence-free games

    def _flatness_checks(self, game: DifferentialGame, sampler: SamplerSpec) -> List[InvariantCheck]:
        name = "dynamics.local_ne_flatness"
        if not derivatives_for(game).is_divergence_free():
            return [_skipped(name, "divergence is not identically zero")]
        search = self.dynamics_service.critical_points(
            game, seeds=16, low=sampler.low, high=sampler.high, require_root=False
        )
        candidates = [p for p in search.points if p.local_ne_candidate]
        if not candidates:
            return [_skipped(name, "no local Nash candidate found")]
        return [_bounded(name, max(p.flatness for p in candidates), 1e-8)]
