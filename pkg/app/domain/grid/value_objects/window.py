"""
Bump Window Value Object
"""
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from app.domain.expr.services.evaluator import bump_array

from .box_grid import BoxGrid


@dataclass(frozen=True)
class BumpWindow:
    """
    Smooth compactly supported window prod_a bump(2 (x_a - c_a) / L_a)

    With the grid's center and lengths the window vanishes on the box
    boundary, which makes windowed samples periodic.
    """
    center: Tuple[float, ...]
    widths: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "center", tuple(float(c) for c in self.center))
        object.__setattr__(self, "widths", tuple(float(w) for w in self.widths))
        if len(self.center) != len(self.widths):
            raise ValueError("Window center and widths must have the same length")
        if any(w <= 0.0 for w in self.widths):
            raise ValueError("Window widths must be positive")

    @classmethod
    def for_grid(cls, grid: BoxGrid) -> "BumpWindow":
        return cls(center=grid.center, widths=grid.lengths)

    def weights(self, coordinates: Sequence[np.ndarray]) -> np.ndarray:
        result = np.ones(np.broadcast_shapes(*(np.shape(c) for c in coordinates)))
        for x, c, width in zip(coordinates, self.center, self.widths):
            result = result * bump_array(2.0 * (x - c) / width)
        return result
