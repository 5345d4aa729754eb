"""
Game Field Service - samples a game's simultaneous gradient onto lattices
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from app.core.config import Settings, settings as default_settings
from app.core.exceptions import GridError
from app.core.logger import get_logger
from app.domain.game.entities import DifferentialGame
from app.domain.game.services import derivatives_for
from app.domain.grid.services import sample
from app.domain.grid.value_objects import MIN_RESOLUTION, BoxGrid, BumpWindow, GridField

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class FieldSample:
    """Du at the nodes of a uniform lattice that includes the box corners"""
    points: np.ndarray
    values: np.ndarray
    variables: tuple

    def header(self) -> list:
        return list(self.variables) + [f"D{v}" for v in self.variables]


class GameFieldService:
    """Service for lattices of Du"""

    def __init__(self, app_settings: Optional[Settings] = None):
        self.settings = app_settings or default_settings

    def fit_resolution(self, dimension: int, requested: int) -> int:
        """Largest power of two <= requested with resolution^dimension under the point cap"""
        cap = self.settings.grid.max_points
        resolution = 1 << max(int(requested).bit_length() - 1, 0)
        while resolution > MIN_RESOLUTION and resolution**dimension > cap:
            resolution //= 2
        if resolution < MIN_RESOLUTION or resolution**dimension > cap:
            raise GridError(
                f"No resolution >= {MIN_RESOLUTION} fits {dimension} axes under the cap of {cap} points"
            )
        if resolution != requested:
            logger.info("Grid resolution clamped", requested=requested, resolution=resolution)
        return resolution

    def box_grid(self, game: DifferentialGame, low: float, high: float, resolution: int) -> BoxGrid:
        fitted = self.fit_resolution(game.dimension, resolution)
        return BoxGrid.cube(game.dimension, low, high, fitted, max_points=self.settings.grid.max_points)

    def windowed_gradient(self, game: DifferentialGame, grid: BoxGrid, window: bool = True) -> GridField:
        """Du on the periodic lattice, multiplied by the box's bump window"""
        gradient_fn = derivatives_for(game).gradient_fn
        return sample(gradient_fn, grid, BumpWindow.for_grid(grid) if window else None)

    def field_sample(self, game: DifferentialGame, low: float, high: float, resolution: int) -> FieldSample:
        """Du on a uniform lattice of resolution nodes per axis, endpoints included"""
        if resolution < 2:
            raise GridError("Field sample needs at least two nodes per axis")
        if resolution**game.dimension > self.settings.grid.max_points:
            raise GridError(
                f"Field sample of {resolution}^{game.dimension} nodes exceeds the point cap"
            )
        axis = np.linspace(low, high, resolution)
        mesh = np.meshgrid(*([axis] * game.dimension), indexing="ij")
        points = np.stack([m.ravel() for m in mesh], axis=1)
        values = derivatives_for(game).gradient_at(points)
        return FieldSample(points=points, values=values, variables=game.variables)
