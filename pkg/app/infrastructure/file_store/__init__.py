from .atomic_writer import atomic_write
from .json_game_repository import JsonGameRepository

__all__ = ["JsonGameRepository", "atomic_write"]
