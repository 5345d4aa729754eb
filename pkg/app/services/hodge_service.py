"""
Hodge Service - decomposition of a game's windowed gradient field
"""
from dataclasses import dataclass
from typing import Optional

from app.core.config import Settings, settings as default_settings
from app.core.logger import get_logger
from app.domain.game.entities import DifferentialGame
from app.domain.grid.value_objects import GridField
from app.domain.hodge.services import decompose, residuals
from app.domain.hodge.value_objects import (
    DecompositionConfig,
    DecompositionResult,
    ResidualReport,
    ZeroModePolicy,
)

from .game_field_service import GameFieldService

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class GameDecomposition:
    game: str
    field: GridField
    result: DecompositionResult
    residuals: ResidualReport

    def to_dict(self) -> dict:
        data = self.result.to_dict()
        data["game"] = self.game
        data["residuals"] = self.residuals.to_dict()
        return data


class HodgeService:
    """Service for Helmholtz-Hodge decompositions of games"""

    def __init__(
        self,
        field_service: Optional[GameFieldService] = None,
        app_settings: Optional[Settings] = None,
    ):
        self.settings = app_settings or default_settings
        self.field_service = field_service or GameFieldService(self.settings)

    def config(self, zero_mode_policy: Optional[str] = None) -> DecompositionConfig:
        base = DecompositionConfig.from_settings(self.settings)
        if zero_mode_policy is None:
            return base
        return DecompositionConfig(
            zero_mode_policy=ZeroModePolicy.parse(zero_mode_policy),
            scheme=base.scheme,
            norm_guard=base.norm_guard,
        )

    def decompose_game(
        self,
        game: DifferentialGame,
        low: Optional[float] = None,
        high: Optional[float] = None,
        resolution: Optional[int] = None,
        config: Optional[DecompositionConfig] = None,
    ) -> GameDecomposition:
        """Sample windowed Du on the box lattice and split it"""
        low = self.settings.sampler.box_low if low is None else low
        high = self.settings.sampler.box_high if high is None else high
        config = config or self.config()

        try:
            grid = self.field_service.box_grid(game, low, high, resolution or self.settings.grid.resolution)
            field = self.field_service.windowed_gradient(game, grid)
            result = decompose(field, config)
            report = residuals(field, config)
            logger.info(
                "Decomposition finished",
                game=game.name,
                resolution=grid.resolution,
                **result.diagnostics.to_dict(),
            )
            return GameDecomposition(game=game.name, field=field, result=result, residuals=report)
        except Exception as e:
            logger.error("Decomposition failed", game=game.name, error=str(e))
            raise
