"""
Game analysis reports
"""
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, List, Tuple

import numpy as np


@dataclass(frozen=True)
class NonstrategicReport:
    """max |Du|_inf over samples and the verdict at tolerance"""
    max_norm: float
    verdict: bool
    tolerance: float
    sampler: Dict[str, float]

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class EquivalenceReport:
    max_deviation: float
    verdict: bool
    tolerance: float
    sampler: Dict[str, float]

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class PotentialCheckReport:
    """Largest weighted-potential residual over sampled unilateral deviations"""
    max_residual: float
    verdict: bool
    tolerance: float
    alpha: Tuple[float, ...]
    sampler: Dict[str, float]

    def to_dict(self) -> dict:
        data = asdict(self)
        data["alpha"] = list(self.alpha)
        return data


@dataclass(frozen=True)
class JacobianResidualReport:
    """Residual maxima of the Jacobian split over a sample set"""
    max_sym_res: float
    max_skew_res: float
    max_abs_divergence: float
    max_jacobian_norm: float
    sampler: Dict[str, float]

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True, eq=False)
class ReconstructionReport:
    """
    Reconstructed exact potential

    ``potential`` evaluates the radial line integral of Du at a point;
    gradient_residual is max |grad potential - Du| by central differences.
    """
    potential: Callable[[np.ndarray], float]
    gradient_residual: float
    max_sym_res: float
    step: float
    sampler: Dict[str, float]
    residuals: List[float] = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        return {
            "gradient_residual": self.gradient_residual,
            "max_sym_res": self.max_sym_res,
            "step": self.step,
            "sampler": self.sampler,
        }
