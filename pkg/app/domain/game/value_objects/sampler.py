"""
Sampler Value Object
"""
from dataclasses import dataclass

import numpy as np
from scipy.stats import qmc


@dataclass(frozen=True)
class SamplerSpec:
    """
    Deterministic low-discrepancy samples in the box [low, high]^n

    Points come from a scrambled Halton sequence seeded by ``seed``, so a
    spec and a dimension always yield the same array.
    """
    low: float = -2.0
    high: float = 2.0
    count: int = 256
    seed: int = 0

    def __post_init__(self):
        if not self.high > self.low:
            raise ValueError(f"Sampler box must satisfy high > low, got [{self.low}, {self.high}]")
        if self.count <= 0:
            raise ValueError("Sampler count must be positive")
        if self.seed < 0:
            raise ValueError("Sampler seed must be nonnegative")

    @classmethod
    def from_settings(cls, sampler_settings) -> "SamplerSpec":
        return cls(
            low=sampler_settings.box_low,
            high=sampler_settings.box_high,
            count=sampler_settings.count,
            seed=sampler_settings.seed,
        )

    def points(self, dimension: int) -> np.ndarray:
        """(count, dimension) sample array"""
        engine = qmc.Halton(d=dimension, scramble=True, seed=self.seed)
        unit = engine.random(self.count)
        return qmc.scale(unit, [self.low] * dimension, [self.high] * dimension)

    def point_pairs(self, dimension: int) -> tuple:
        """Two (count, dimension) arrays drawn jointly from a 2n-dimensional sequence"""
        joint = self.points(2 * dimension)
        return joint[:, :dimension], joint[:, dimension:]

    def to_dict(self) -> dict:
        return {"low": self.low, "high": self.high, "count": self.count, "seed": self.seed}
