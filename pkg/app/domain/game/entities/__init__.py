from .game import DifferentialGame
from .player import Player

__all__ = ["DifferentialGame", "Player"]
