from .jacobian_split import JacobianSplit
from .reports import (
    EquivalenceReport,
    JacobianResidualReport,
    NonstrategicReport,
    PotentialCheckReport,
    ReconstructionReport,
)
from .sampler import SamplerSpec
from .strategy_profile import StrategyProfile

__all__ = [
    "EquivalenceReport",
    "JacobianResidualReport",
    "JacobianSplit",
    "NonstrategicReport",
    "PotentialCheckReport",
    "ReconstructionReport",
    "SamplerSpec",
    "StrategyProfile",
]
