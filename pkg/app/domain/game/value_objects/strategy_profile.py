"""
Strategy Profile Value Object
"""
import math
from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

import numpy as np


@dataclass(frozen=True)
class StrategyProfile:
    """Joint strategy, one real per flat coordinate"""
    coordinates: Tuple[float, ...]

    def __post_init__(self):
        coordinates = tuple(float(c) for c in self.coordinates)
        if not coordinates:
            raise ValueError("Strategy profile cannot be empty")
        if not all(math.isfinite(c) for c in coordinates):
            raise ValueError(f"Strategy profile must be finite: {coordinates}")
        object.__setattr__(self, "coordinates", coordinates)

    @classmethod
    def for_game(cls, game, values: Sequence[float]) -> "StrategyProfile":
        """Profile checked against the game's dimension"""
        if len(values) != game.dimension:
            raise ValueError(
                f"Profile has {len(values)} coordinates, game '{game.name}' has dimension {game.dimension}"
            )
        return cls(tuple(values))

    @property
    def dimension(self) -> int:
        return len(self.coordinates)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.coordinates, dtype=float)

    def environment(self, variables: Sequence[str]) -> Dict[str, float]:
        return dict(zip(variables, self.coordinates))

    def norm(self) -> float:
        return float(np.linalg.norm(self.as_array()))
