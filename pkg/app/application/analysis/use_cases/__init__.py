from .check_game import CheckGameRequest, CheckGameResponse, CheckGameUseCase
from .classify_game import ClassifyGameRequest, ClassifyGameResponse, ClassifyGameUseCase
from .decompose_game import DecomposeGameRequest, DecomposeGameResponse, DecomposeGameUseCase
from .sample_field import SampleFieldRequest, SampleFieldResponse, SampleFieldUseCase

__all__ = [
    "CheckGameRequest",
    "CheckGameResponse",
    "CheckGameUseCase",
    "ClassifyGameRequest",
    "ClassifyGameResponse",
    "ClassifyGameUseCase",
    "DecomposeGameRequest",
    "DecomposeGameResponse",
    "DecomposeGameUseCase",
    "SampleFieldRequest",
    "SampleFieldResponse",
    "SampleFieldUseCase",
]
