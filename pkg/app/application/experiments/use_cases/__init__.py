from .interpolation_spectrum import (
    InterpolationSpectrumRequest,
    InterpolationSpectrumResponse,
    InterpolationSpectrumUseCase,
)

__all__ = [
    "InterpolationSpectrumRequest",
    "InterpolationSpectrumResponse",
    "InterpolationSpectrumUseCase",
]
