from .game_spec import GameSpecDocument, PlayerSpec
from .reports import ErrorResponse
from .run_config import RunConfig, parse_floats, parse_gammas

__all__ = [
    "ErrorResponse",
    "GameSpecDocument",
    "PlayerSpec",
    "RunConfig",
    "parse_floats",
    "parse_gammas",
]
