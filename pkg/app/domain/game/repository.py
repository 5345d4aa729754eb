"""
Game Repository Interface
"""
from abc import ABC, abstractmethod
from pathlib import Path

from .entities import DifferentialGame


class GameRepository(ABC):
    """Abstract source of game-spec documents"""

    @abstractmethod
    def load(self, path: Path) -> DifferentialGame:
        """Load and validate the game stored at path"""
        pass

    @abstractmethod
    def save(self, game: DifferentialGame, path: Path) -> Path:
        """Store game as a game-spec document"""
        pass
