from .decomposition import (
    DecompositionConfig,
    DecompositionDiagnostics,
    DecompositionResult,
    EnergyFractions,
    PotentialFit,
    ResidualReport,
    ZeroModePolicy,
)

__all__ = [
    "DecompositionConfig",
    "DecompositionDiagnostics",
    "DecompositionResult",
    "EnergyFractions",
    "PotentialFit",
    "ResidualReport",
    "ZeroModePolicy",
]
