from .integrator_config import IntegrationMethod, IntegratorConfig
from .reports import (
    CriticalPoint,
    CriticalPointSearch,
    EnsembleVolumeReport,
    PlayerHessianRange,
    RecurrenceReport,
)
from .trajectory import TerminationReason, Trajectory

__all__ = [
    "CriticalPoint",
    "CriticalPointSearch",
    "EnsembleVolumeReport",
    "IntegrationMethod",
    "IntegratorConfig",
    "PlayerHessianRange",
    "RecurrenceReport",
    "TerminationReason",
    "Trajectory",
]
