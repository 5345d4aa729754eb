from .critical_points import CriticalPointsRequest, CriticalPointsResponse, CriticalPointsUseCase
from .ensemble import EnsembleRequest, EnsembleResponse, EnsembleUseCase
from .recurrence import RecurrenceRequest, RecurrenceResponse, RecurrenceUseCase
from .simulate import SimulateRequest, SimulateResponse, SimulateUseCase

__all__ = [
    "CriticalPointsRequest",
    "CriticalPointsResponse",
    "CriticalPointsUseCase",
    "EnsembleRequest",
    "EnsembleResponse",
    "EnsembleUseCase",
    "RecurrenceRequest",
    "RecurrenceResponse",
    "RecurrenceUseCase",
    "SimulateRequest",
    "SimulateResponse",
    "SimulateUseCase",
]
